#include "secsheaf/ring.hpp"

#include <algorithm>

#include "secsheaf/errors.hpp"

namespace secsheaf {

RingPtr FiniteRing::zmod(int n) {
    if (n < 1) throw StructureError("zmod requires n >= 1");
    auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
    r->order_ = n;
    r->zero_ = 0;
    r->one_ = n == 1 ? 0 : 1;
    r->add_.resize(n * n);
    r->mul_.resize(n * n);
    r->neg_.resize(n);
    for (int a = 0; a < n; ++a) {
        r->neg_[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) {
            r->add_[a * n + b] = (a + b) % n;
            r->mul_[a * n + b] = (a * b) % n;
        }
    }
    r->description_ = "Z/" + std::to_string(n);
    r->verify();
    return r;
}

RingPtr FiniteRing::product(std::vector<RingPtr> factors) {
    if (factors.empty()) throw StructureError("product requires at least one factor");
    int n = 1;
    for (const auto& f : factors) n *= f->order();
    auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
    r->factors_ = std::move(factors);
    r->order_ = n;
    r->add_.resize(n * n);
    r->mul_.resize(n * n);
    r->neg_.resize(n);

    const auto& fs = r->factors_;
    auto decode = [&](int a) {
        std::vector<int> c(fs.size());
        for (size_t i = fs.size(); i-- > 0;) {
            c[i] = a % fs[i]->order();
            a /= fs[i]->order();
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int a = 0;
        for (size_t i = 0; i < fs.size(); ++i) a = a * fs[i]->order() + c[i];
        return a;
    };

    std::vector<int> zero(fs.size()), one(fs.size());
    for (size_t i = 0; i < fs.size(); ++i) {
        zero[i] = fs[i]->zero();
        one[i] = fs[i]->one();
    }
    r->zero_ = encode(zero);
    r->one_ = encode(one);

    for (int a = 0; a < n; ++a) {
        auto ca = decode(a);
        std::vector<int> cn(fs.size());
        for (size_t i = 0; i < fs.size(); ++i) cn[i] = fs[i]->neg(ca[i]);
        r->neg_[a] = encode(cn);
        for (int b = 0; b < n; ++b) {
            auto cb = decode(b);
            std::vector<int> cs(fs.size()), cm(fs.size());
            for (size_t i = 0; i < fs.size(); ++i) {
                cs[i] = fs[i]->add(ca[i], cb[i]);
                cm[i] = fs[i]->mul(ca[i], cb[i]);
            }
            r->add_[a * n + b] = encode(cs);
            r->mul_[a * n + b] = encode(cm);
        }
    }

    r->description_ = fs[0]->description();
    for (size_t i = 1; i < fs.size(); ++i) r->description_ += " x " + fs[i]->description();
    r->verify();
    return r;
}

RingPtr FiniteRing::from_tables(const std::vector<std::vector<int>>& add,
                                const std::vector<std::vector<int>>& mul, int one) {
    int n = (int)add.size();
    if (n == 0) throw StructureError("empty operation table");
    if ((int)mul.size() != n) throw StructureError("add and mul tables disagree on order");
    auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
    r->order_ = n;
    r->add_.resize(n * n);
    r->mul_.resize(n * n);
    for (int a = 0; a < n; ++a) {
        if ((int)add[a].size() != n || (int)mul[a].size() != n)
            throw StructureError("ragged operation table at row " + std::to_string(a));
        for (int b = 0; b < n; ++b) {
            int s = add[a][b], m = mul[a][b];
            if (s < 0 || s >= n || m < 0 || m >= n)
                throw StructureError("table entry out of range at (" + std::to_string(a) + "," +
                                     std::to_string(b) + ")");
            r->add_[a * n + b] = s;
            r->mul_[a * n + b] = m;
        }
    }
    if (one < 0 || one >= n) throw StructureError("identity id out of range");
    r->one_ = one;

    int zero = -1;
    for (int z = 0; z < n && zero < 0; ++z) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = r->add(z, a) == a;
        if (ok) zero = z;
    }
    if (zero < 0) throw StructureError("no additive identity in table");
    r->zero_ = zero;

    r->neg_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (r->add(a, b) == zero) {
                r->neg_[a] = b;
                break;
            }
    r->description_ = "table[" + std::to_string(n) + "]";
    r->verify();
    return r;
}

void FiniteRing::verify() const {
    int n = order_;
    for (int a = 0; a < n; ++a) {
        if (neg_[a] < 0) throw StructureError("element " + element_name(a) + " has no additive inverse");
        if (add(zero_, a) != a) throw StructureError("additive identity fails at " + element_name(a));
        if (mul(one_, a) != a) throw StructureError("multiplicative identity fails at " + element_name(a));
        for (int b = 0; b < n; ++b) {
            if (add(a, b) != add(b, a)) throw StructureError("addition not commutative");
            if (mul(a, b) != mul(b, a)) throw StructureError("multiplication not commutative");
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c)))
                    throw StructureError("addition not associative");
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw StructureError("multiplication not associative");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    throw StructureError("multiplication does not distribute over addition");
            }
}

int FiniteRing::pow(int a, int k) const {
    int r = one_;
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

bool FiniteRing::is_unit(int a) const { return unit_inverse(a).has_value(); }

std::optional<int> FiniteRing::unit_inverse(int a) const {
    for (int b = 0; b < order_; ++b)
        if (mul(a, b) == one_) return b;
    return std::nullopt;
}

std::string FiniteRing::element_name(int a) const {
    if (!factors_.empty()) {
        auto c = decode(a);
        std::string s = "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += factors_[i]->element_name(c[i]);
        }
        return s + ")";
    }
    return std::to_string(a);
}

std::string FiniteRing::subset_name(const Bitset& s) const {
    return s.to_string([this](int a) { return element_name(a); });
}

std::vector<int> FiniteRing::decode(int a) const {
    std::vector<int> c(factors_.size());
    for (size_t i = factors_.size(); i-- > 0;) {
        c[i] = a % factors_[i]->order();
        a /= factors_[i]->order();
    }
    return c;
}

int FiniteRing::encode(const std::vector<int>& comps) const {
    int a = 0;
    for (size_t i = 0; i < factors_.size(); ++i) a = a * factors_[i]->order() + comps[i];
    return a;
}

}  // namespace secsheaf
