#include "secsheaf/module.hpp"

#include "secsheaf/errors.hpp"

namespace secsheaf {

ModulePtr FiniteModule::natural(RingPtr ring) {
    auto m = std::shared_ptr<FiniteModule>(new FiniteModule());
    int n = ring->order();
    m->order_ = n;
    m->zero_ = ring->zero();
    m->add_.resize(n * n);
    m->act_.resize(n * n);
    m->neg_.resize(n);
    for (int a = 0; a < n; ++a) {
        m->neg_[a] = ring->neg(a);
        for (int b = 0; b < n; ++b) {
            m->add_[a * n + b] = ring->add(a, b);
            m->act_[a * n + b] = ring->mul(a, b);
        }
    }
    m->description_ = ring->description() + " (natural)";
    for (int a = 0; a < n; ++a) m->names_.push_back(ring->element_name(a));
    m->ring_ = std::move(ring);
    m->verify();
    return m;
}

ModulePtr FiniteModule::zero_module(RingPtr ring) {
    auto m = std::shared_ptr<FiniteModule>(new FiniteModule());
    m->ring_ = std::move(ring);
    m->order_ = 1;
    m->zero_ = 0;
    m->add_ = {0};
    m->neg_ = {0};
    m->act_.assign(m->ring_->order(), 0);
    m->description_ = "0";
    m->names_ = {"0"};
    m->verify();
    return m;
}

ModulePtr FiniteModule::cyclic_product(RingPtr zmod_ring, const std::vector<int>& orders) {
    int n = zmod_ring->order();
    if (!zmod_ring->factors().empty() || zmod_ring->description().rfind("Z/", 0) != 0)
        throw StructureError("cyclic_product requires a Z/n base ring");
    if (orders.empty()) return zero_module(std::move(zmod_ring));
    long long total = 1;
    for (int d : orders) {
        if (d < 1 || n % d != 0)
            throw StructureError("cyclic factor order " + std::to_string(d) + " does not divide " +
                                 std::to_string(n));
        total *= d;
    }

    int k = (int)total;
    auto decode = [&](int a) {
        std::vector<int> c(orders.size());
        for (size_t i = orders.size(); i-- > 0;) {
            c[i] = a % orders[i];
            a /= orders[i];
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int a = 0;
        for (size_t i = 0; i < orders.size(); ++i) a = a * orders[i] + c[i];
        return a;
    };

    std::vector<std::vector<int>> add(k, std::vector<int>(k)), act(n, std::vector<int>(k));
    std::vector<std::string> names(k);
    for (int a = 0; a < k; ++a) {
        auto ca = decode(a);
        if (orders.size() == 1) {
            names[a] = std::to_string(ca[0]);
        } else {
            names[a] = "(";
            for (size_t i = 0; i < ca.size(); ++i) {
                if (i) names[a] += ",";
                names[a] += std::to_string(ca[i]);
            }
            names[a] += ")";
        }
        for (int b = 0; b < k; ++b) {
            auto cb = decode(b);
            std::vector<int> cs(orders.size());
            for (size_t i = 0; i < orders.size(); ++i) cs[i] = (ca[i] + cb[i]) % orders[i];
            add[a][b] = encode(cs);
        }
        for (int r = 0; r < n; ++r) {
            std::vector<int> cs(orders.size());
            for (size_t i = 0; i < orders.size(); ++i) cs[i] = (int)(((long long)r * ca[i]) % orders[i]);
            act[r][a] = encode(cs);
        }
    }

    std::string desc;
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i) desc += " x ";
        desc += "Z/" + std::to_string(orders[i]);
    }
    return from_tables_named(std::move(zmod_ring), add, act, std::move(names), std::move(desc));
}

ModulePtr FiniteModule::from_tables(RingPtr ring, const std::vector<std::vector<int>>& add,
                                    const std::vector<std::vector<int>>& act) {
    return from_tables_named(std::move(ring), add, act, {}, "");
}

ModulePtr FiniteModule::from_tables_named(RingPtr ring, const std::vector<std::vector<int>>& add,
                                          const std::vector<std::vector<int>>& act,
                                          std::vector<std::string> names, std::string description) {
    int k = (int)add.size();
    if (k == 0) throw StructureError("empty module table");
    if ((int)act.size() != ring->order()) throw StructureError("action table must have |R| rows");
    auto m = std::shared_ptr<FiniteModule>(new FiniteModule());
    m->order_ = k;
    m->add_.resize(k * k);
    m->act_.resize(ring->order() * k);
    for (int a = 0; a < k; ++a) {
        if ((int)add[a].size() != k) throw StructureError("ragged module addition table");
        for (int b = 0; b < k; ++b) {
            int v = add[a][b];
            if (v < 0 || v >= k) throw StructureError("module addition entry out of range");
            m->add_[a * k + b] = v;
        }
    }
    for (int r = 0; r < ring->order(); ++r) {
        if ((int)act[r].size() != k) throw StructureError("ragged module action table");
        for (int a = 0; a < k; ++a) {
            int v = act[r][a];
            if (v < 0 || v >= k) throw StructureError("module action entry out of range");
            m->act_[r * k + a] = v;
        }
    }

    int zero = -1;
    for (int z = 0; z < k && zero < 0; ++z) {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a) ok = m->add_[z * k + a] == a;
        if (ok) zero = z;
    }
    if (zero < 0) throw StructureError("module has no additive identity");
    m->zero_ = zero;

    m->neg_.assign(k, -1);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (m->add_[a * k + b] == zero) {
                m->neg_[a] = b;
                break;
            }

    m->names_ = std::move(names);
    m->description_ = description.empty() ? "module[" + std::to_string(k) + "]" : std::move(description);
    m->ring_ = std::move(ring);
    m->verify();
    return m;
}

ModulePtr FiniteModule::restrict_scalars(const RingHom& phi, const ModulePtr& target_module) {
    if (target_module->ring() != phi.target())
        throw StructureError("restrict_scalars: module is not over the hom's target ring");
    int k = target_module->order();
    const auto& r = phi.source();
    std::vector<std::vector<int>> add(k, std::vector<int>(k)), act(r->order(), std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) add[a][b] = target_module->add(a, b);
    for (int s = 0; s < r->order(); ++s)
        for (int a = 0; a < k; ++a) act[s][a] = target_module->act(phi(s), a);
    std::vector<std::string> names;
    for (int a = 0; a < k; ++a) names.push_back(target_module->element_name(a));
    return from_tables_named(r, add, act, std::move(names),
                             target_module->description() + " over " + r->description());
}

void FiniteModule::verify() const {
    int k = order_;
    const int n = ring_->order();
    for (int a = 0; a < k; ++a) {
        if (neg_[a] < 0) throw StructureError("module element without additive inverse");
        for (int b = 0; b < k; ++b)
            if (add(a, b) != add(b, a)) throw StructureError("module addition not commutative");
    }
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                if (add(add(a, b), c) != add(a, add(b, c)))
                    throw StructureError("module addition not associative");
    for (int a = 0; a < k; ++a)
        if (act(ring_->one(), a) != a) throw StructureError("module action not unital");
    for (int r = 0; r < n; ++r)
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b)
                if (act(r, add(a, b)) != add(act(r, a), act(r, b)))
                    throw StructureError("module action not additive in the module argument");
            for (int s = 0; s < n; ++s) {
                if (act(ring_->add(r, s), a) != add(act(r, a), act(s, a)))
                    throw StructureError("module action not additive in the ring argument");
                if (act(r, act(s, a)) != act(ring_->mul(r, s), a))
                    throw StructureError("module action not associative over ring multiplication");
            }
        }
}

int FiniteModule::additive_order(int a) const {
    int x = a, ord = 1;
    while (x != zero_) {
        x = add(x, a);
        ++ord;
    }
    return ord;
}

std::string FiniteModule::element_name(int a) const {
    if (!names_.empty()) return names_[a];
    return std::to_string(a);
}

std::string FiniteModule::subset_name(const Bitset& s) const {
    return s.to_string([this](int a) { return element_name(a); });
}

}  // namespace secsheaf
