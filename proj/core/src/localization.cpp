#include "secsheaf/localization.hpp"

#include <algorithm>
#include <set>

#include "secsheaf/errors.hpp"

namespace secsheaf {

int LocalizedModule::fraction(int m, int t) const {
    if (!is_invertible(t))
        throw PreconditionError("scalar " + source->ring()->element_name(t) +
                                " does not act invertibly on the localization");
    return inverse_action[t][canonical(m)];
}

LocalizedModule localize_at_set(const ModulePtr& n, Bitset mult_set) {
    const auto& ring = n->ring();
    if (!mult_set.test(ring->one())) throw PreconditionError("multiplicative set must contain 1");
    for (int s : mult_set.elements())
        for (int t : mult_set.elements())
            if (!mult_set.test(ring->mul(s, t)))
                throw PreconditionError("set is not multiplicatively closed");

    Bitset torsion(n->order());
    for (int a = 0; a < n->order(); ++a)
        for (int s : mult_set.elements())
            if (n->act(s, a) == n->zero_elem()) {
                torsion.set(a);
                break;
            }
    QuotientModule q = quotient(n, Submodule(n, torsion));
    LocalizedModule loc{n, std::move(mult_set), q.module, q.projection, q.rep, {}};

    loc.inverse_action.resize(ring->order());
    int k = loc.result->order();
    for (int t = 0; t < ring->order(); ++t) {
        std::vector<int> inv(k, -1);
        bool bijective = true;
        for (int x = 0; x < k && bijective; ++x) {
            int y = loc.result->act(t, x);
            if (inv[y] >= 0)
                bijective = false;
            else
                inv[y] = x;
        }
        if (bijective) loc.inverse_action[t] = std::move(inv);
    }

    // Everything in S must act bijectively on the result.
    for (int s : loc.inverted.elements())
        if (!loc.is_invertible(s))
            throw InternalCheckError("inverted scalar fails to act bijectively after quotienting");
    // The canonical kernel is exactly the S-torsion.
    if (loc.canonical.kernel().elements() != torsion)
        throw InternalCheckError("localization kernel mismatch");
    return loc;
}

LocalizedModule localize_at_prime(const ModulePtr& n, const Ideal& p) {
    if (p.ring() != n->ring()) throw StructureError("localizing at a prime of a different ring");
    return localize_at_set(n, complement_of_prime(p));
}

LocalizedModule localize_at_element(const ModulePtr& n, int f) {
    return localize_at_set(n, powers_of(n->ring(), f));
}

TorsionSubmodule torsion_submodule(const ModulePtr& n, const Ideal& i) {
    if (i.ring() != n->ring()) throw StructureError("torsion with ideal over a different ring");
    int stab = i.stable_exponent();
    Submodule acc = colon_submodule(n, i.stable_power());

    // The chain (0 : I^k) must rise to exactly the stable colon.
    Submodule chain = colon_submodule(n, i);
    Ideal power = i;
    for (int k = 2; k <= stab; ++k) {
        power = power.product(i);
        chain = chain.sum(colon_submodule(n, power));
    }
    if (chain != acc) throw InternalCheckError("torsion chain does not stabilize at the stable power");
    return TorsionSubmodule{n, i, acc, stab};
}

bool is_torsion(const ModulePtr& n, const Ideal& i) {
    return torsion_submodule(n, i).elements.is_full();
}

IdealTransform ideal_transform(const ModulePtr& n, const Ideal& i, const Guards& guards) {
    if (i.ring() != n->ring()) throw StructureError("ideal transform over a different ring");
    ModulePtr r_as_module = FiniteModule::natural(n->ring());

    // Powers up to stability, plus one more to witness the plateau.
    std::vector<Ideal> powers{i};
    while (!(powers.back().product(i) == powers.back())) powers.push_back(powers.back().product(i));
    powers.push_back(powers.back());

    IdealTransform out{n, i, {}, nullptr, ModuleMap::zero_map(n, n), {}};

    std::vector<StandaloneSubmodule> power_mods;
    std::vector<std::vector<std::vector<int>>> power_homs;
    for (const auto& p : powers) {
        power_mods.push_back(Submodule(r_as_module, p.elements()).as_module());
        power_homs.push_back(enumerate_homs(power_mods.back().module, n, guards));
    }
    for (size_t k = 0; k + 1 < powers.size(); ++k) {
        // Restrict each map on I^k along the inclusion I^(k+1) <= I^k.
        std::set<std::vector<int>> restricted;
        const auto& small = power_mods[k + 1];
        const auto& big = power_mods[k];
        for (const auto& f : power_homs[k]) {
            std::vector<int> g(small.module->order());
            for (int x = 0; x < small.module->order(); ++x) {
                int parent_elem = small.elem[x];
                int idx = -1;
                for (int y = 0; y < big.module->order(); ++y)
                    if (big.elem[y] == parent_elem) {
                        idx = y;
                        break;
                    }
                g[x] = f[idx];
            }
            restricted.insert(std::move(g));
        }
        bool inj = restricted.size() == power_homs[k].size();
        bool surj = restricted.size() == power_homs[k + 1].size();
        out.audit.push_back(IdealTransform::AuditRow{(int)k + 1, powers[k].size(),
                                                     (int)power_homs[k].size(), inj && surj});
    }
    if (out.audit.empty() || !out.audit.back().transition_bijective)
        throw InternalCheckError("ideal-transform system fails to stabilize");

    // The limit is Hom at the stable power.
    int stable_idx = (int)powers.size() - 2;
    out.hom = hom_module(power_mods[stable_idx].module, n, guards);
    out.transform = out.hom.module;

    const auto& st = power_mods[stable_idx];
    std::vector<int> eta_values(n->order());
    for (int a = 0; a < n->order(); ++a) {
        std::vector<int> f(st.module->order());
        for (int x = 0; x < st.module->order(); ++x) f[x] = n->act(st.elem[x], a);
        int idx = out.hom.index_of(f);
        if (idx < 0) throw InternalCheckError("multiplication map missing from Hom enumeration");
        eta_values[a] = idx;
    }
    out.eta = ModuleMap(n, out.transform, std::move(eta_values));

    // ker eta = Gamma_I(N); coker eta is I-torsion.
    if (out.eta.kernel() != torsion_submodule(n, i).elements)
        throw InternalCheckError("ideal-transform kernel is not the torsion submodule");
    QuotientModule coker = quotient(out.transform, out.eta.image());
    if (!is_torsion(coker.module, i))
        throw InternalCheckError("ideal-transform cokernel is not torsion");
    return out;
}

}  // namespace secsheaf
