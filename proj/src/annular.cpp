#include "diagmon/annular.hpp"

#include "diagmon/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace diagmon {

FiniteMonoid::Element AnnMonoid::find(const Partition& p) const
{
    auto it = index.find(p);
    require(it != index.end(), ErrorCode::NotClosed, to_string(p) + " is not an annular partition");
    return it->second;
}

AnnMonoid build_ann_monoid(int n, int bound)
{
    require(n >= 1, ErrorCode::Range, "annular monoid needs n >= 1");
    require(n <= bound, ErrorCode::BoundExceeded,
            "annular monoid of size " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    using Element = FiniteMonoid::Element;

    AnnMonoid ann;
    ann.n = n;
    auto intern = [&](const Partition& p) {
        auto [it, inserted] = ann.index.emplace(p, static_cast<Element>(ann.elements.size()));
        if (inserted) {
            ann.elements.push_back(p);
        }
        return it->second;
    };

    std::vector<Partition> gens{project_to_ann(affine_identity(n)), project_to_ann(zeta(n)),
                                project_to_ann(zeta_inverse(n))};
    if (n >= 2) {
        for (int i = 1; i <= n; ++i) {
            gens.push_back(project_to_ann(cup_cap(n, i)));
        }
    }
    intern(gens.front());
    std::vector<Element> gen_index;
    for (const auto& g : gens) {
        const Element e = intern(g);
        if (std::find(gen_index.begin(), gen_index.end(), e) == gen_index.end()) {
            gen_index.push_back(e);
        }
    }

    // Right Cayley graph, plus a spanning tree: element = parent * generator.
    std::vector<std::vector<Element>> right;
    std::vector<Element> parent{0};
    std::vector<Element> via{0};
    std::vector<Element> order{0};
    std::vector<bool> done{true};
    for (std::size_t i = 1; i < ann.elements.size(); ++i) {
        done.push_back(false);
    }
    std::deque<Element> queue{0};
    while (!queue.empty()) {
        const Element x = queue.front();
        queue.pop_front();
        if (right.size() <= x) {
            right.resize(x + 1);
        }
        right[x].resize(gen_index.size());
        for (std::size_t g = 0; g < gen_index.size(); ++g) {
            const Element y = intern(compose(ann.elements[x], ann.elements[gen_index[g]]));
            right[x][g] = y;
            if (done.size() <= y) {
                done.resize(y + 1, false);
            }
            if (!done[y]) {
                done[y] = true;
                if (parent.size() <= y) {
                    parent.resize(y + 1);
                    via.resize(y + 1);
                }
                parent[y] = x;
                via[y] = static_cast<Element>(g);
                order.push_back(y);
                queue.push_back(y);
            }
        }
    }
    const std::size_t size = ann.elements.size();
    require(order.size() == size, ErrorCode::Internal, "generators escaped the closure");

    std::vector<Element> table(size * size);
    for (Element x = 0; x < size; ++x) {
        table[x * size + 0] = x;
    }
    for (std::size_t k = 1; k < order.size(); ++k) {
        const Element y = order[k];
        for (Element x = 0; x < size; ++x) {
            table[x * size + y] = right[table[x * size + parent[y]]][via[y]];
        }
    }

    std::vector<Element> involution(size);
    ann.rotation.resize(size);
    ann.ranks.resize(size);
    for (Element x = 0; x < size; ++x) {
        involution[x] = ann.find(reflect(ann.elements[x]));
        ann.rotation[x] = ann.find(rotate(ann.elements[x]));
        ann.ranks[x] = rank(ann.elements[x]);
    }
    ann.generators = gen_index;
    ann.monoid = FiniteMonoid(size, std::move(table), std::move(involution), gen_index);
    return ann;
}

const AnnMonoid& shared_ann_monoid(int n)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<AnnMonoid>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<AnnMonoid>(build_ann_monoid(n));
    }
    return *slot;
}

} // namespace diagmon
