#include "secsheaf/constructions.hpp"

#include <algorithm>
#include <map>

#include "secsheaf/errors.hpp"

namespace secsheaf {

QuotientModule quotient(const ModulePtr& m, const Submodule& n) {
    if (n.parent() != m) throw StructureError("quotient by a submodule of a different module");

    int k = m->order();
    std::vector<int> coset_rep(k);
    for (int a = 0; a < k; ++a) {
        int best = a;
        for (int t : n.elements().elements()) best = std::min(best, m->add(a, t));
        coset_rep[a] = best;
    }
    std::vector<int> reps;
    for (int a = 0; a < k; ++a)
        if (coset_rep[a] == a) reps.push_back(a);
    std::map<int, int> id_of;
    for (int i = 0; i < (int)reps.size(); ++i) id_of[reps[i]] = i;

    int q = (int)reps.size();
    const auto& ring = m->ring();
    std::vector<std::vector<int>> add(q, std::vector<int>(q)), act(ring->order(), std::vector<int>(q));
    std::vector<std::string> names(q);
    for (int i = 0; i < q; ++i) {
        names[i] = m->element_name(reps[i]) + "~";
        for (int j = 0; j < q; ++j) add[i][j] = id_of[coset_rep[m->add(reps[i], reps[j])]];
        for (int r = 0; r < ring->order(); ++r) act[r][i] = id_of[coset_rep[m->act(r, reps[i])]];
    }
    ModulePtr qm = FiniteModule::from_tables_named(ring, add, act, std::move(names),
                                                   m->description() + "/" + n.name());

    std::vector<int> proj(k);
    for (int a = 0; a < k; ++a) proj[a] = id_of[coset_rep[a]];
    ModuleMap pr(m, qm, std::move(proj));
    return QuotientModule{std::move(qm), std::move(pr), std::move(reps)};
}

int DirectSum::encode(int a, int b) const { return a * right_order + b; }
std::pair<int, int> DirectSum::decode(int x) const { return {x / right_order, x % right_order}; }

DirectSum direct_sum(const ModulePtr& a, const ModulePtr& b) {
    if (a->ring() != b->ring()) throw StructureError("direct sum of modules over different rings");
    const auto& ring = a->ring();
    int ka = a->order(), kb = b->order(), k = ka * kb;

    std::vector<std::vector<int>> add(k, std::vector<int>(k)), act(ring->order(), std::vector<int>(k));
    std::vector<std::string> names(k);
    for (int x = 0; x < k; ++x) {
        int xa = x / kb, xb = x % kb;
        names[x] = "(" + a->element_name(xa) + "," + b->element_name(xb) + ")";
        for (int y = 0; y < k; ++y)
            add[x][y] = a->add(xa, y / kb) * kb + b->add(xb, y % kb);
        for (int r = 0; r < ring->order(); ++r) act[r][x] = a->act(r, xa) * kb + b->act(r, xb);
    }
    ModulePtr mod = FiniteModule::from_tables_named(ring, add, act, std::move(names),
                                                    a->description() + " (+) " + b->description());

    std::vector<int> il(ka), ir(kb), pl(k), prj(k);
    for (int x = 0; x < ka; ++x) il[x] = x * kb + b->zero_elem();
    for (int x = 0; x < kb; ++x) ir[x] = a->zero_elem() * kb + x;
    for (int x = 0; x < k; ++x) {
        pl[x] = x / kb;
        prj[x] = x % kb;
    }
    return DirectSum{mod,
                     ModuleMap(a, mod, std::move(il)),
                     ModuleMap(b, mod, std::move(ir)),
                     ModuleMap(mod, a, std::move(pl)),
                     ModuleMap(mod, b, std::move(prj)),
                     kb};
}

ModulePtr product_module(const RingPtr& product_ring, const std::vector<ModulePtr>& components) {
    const auto& factors = product_ring->factors();
    if (factors.size() != components.size())
        throw StructureError("product_module needs one component per ring factor");
    for (size_t i = 0; i < factors.size(); ++i)
        if (components[i]->ring() != factors[i])
            throw StructureError("component module over the wrong factor ring");

    int k = 1;
    for (const auto& c : components) k *= c->order();
    auto decode = [&](int x) {
        std::vector<int> c(components.size());
        for (size_t i = components.size(); i-- > 0;) {
            c[i] = x % components[i]->order();
            x /= components[i]->order();
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int x = 0;
        for (size_t i = 0; i < components.size(); ++i) x = x * components[i]->order() + c[i];
        return x;
    };

    std::vector<std::vector<int>> add(k, std::vector<int>(k)),
        act(product_ring->order(), std::vector<int>(k));
    std::vector<std::string> names(k);
    for (int x = 0; x < k; ++x) {
        auto cx = decode(x);
        names[x] = "(";
        for (size_t i = 0; i < cx.size(); ++i) {
            if (i) names[x] += ",";
            names[x] += components[i]->element_name(cx[i]);
        }
        names[x] += ")";
        for (int y = 0; y < k; ++y) {
            auto cy = decode(y);
            std::vector<int> cs(components.size());
            for (size_t i = 0; i < components.size(); ++i) cs[i] = components[i]->add(cx[i], cy[i]);
            add[x][y] = encode(cs);
        }
        for (int r = 0; r < product_ring->order(); ++r) {
            auto cr = product_ring->decode(r);
            std::vector<int> cs(components.size());
            for (size_t i = 0; i < components.size(); ++i) cs[i] = components[i]->act(cr[i], cx[i]);
            act[r][x] = encode(cs);
        }
    }

    std::string desc;
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) desc += " x ";
        desc += components[i]->description();
    }
    return FiniteModule::from_tables_named(product_ring, add, act, std::move(names), std::move(desc));
}

}  // namespace secsheaf
