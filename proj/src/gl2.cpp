#include "chen/gl2.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chen {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned smallest_non_residue(unsigned p) {
    std::vector<bool> residue(p, false);
    for (unsigned x = 1; x < p; ++x) residue[(x * x) % p] = true;
    for (unsigned e = 2; e < p; ++e)
        if (!residue[e]) return e;
    throw std::logic_error("smallest_non_residue: none found");
}

const char* subgroup_label(SubgroupId id) {
    switch (id) {
        case SubgroupId::Trivial: return "1";
        case SubgroupId::SplitTorus: return "T";
        case SubgroupId::SplitNormalizer: return "N";
        case SubgroupId::NonsplitTorus: return "T'";
        case SubgroupId::NonsplitNormalizer: return "N'";
        case SubgroupId::BorelUpper: return "B+";
        case SubgroupId::BorelLower: return "B-";
        case SubgroupId::Full: return "G";
    }
    return "?";
}

std::string ConjClass::label() const {
    std::ostringstream os;
    switch (kind) {
        case ClassKind::Central: os << "central(" << x << ")"; break;
        case ClassKind::Split: os << "split(" << x << "," << y << ")"; break;
        case ClassKind::Jordan: os << "jordan(" << x << ")"; break;
        case ClassKind::NonSplit: os << "nonsplit(" << z.a << "," << z.b << ")"; break;
    }
    return os.str();
}

Group::Group(unsigned p, std::optional<unsigned> epsilon_override) : p_(p) {
    if (p == 2)
        throw std::invalid_argument(
            "p = 2 is rejected: the curve X(2) has genus zero, so there is nothing to verify");
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (p > 31) throw std::invalid_argument("p too large for exhaustive construction");

    if (epsilon_override) {
        unsigned e = *epsilon_override;
        if (e == 0 || e >= p) throw std::invalid_argument("epsilon out of range");
        bool residue = false;
        for (unsigned x = 1; x < p && !residue; ++x)
            if ((x * x) % p == e) residue = true;
        if (residue) throw std::invalid_argument("epsilon must be a quadratic non-residue");
        eps_ = e;
    } else {
        eps_ = smallest_non_residue(p);
    }
    fp2_ = Fp2{p_, eps_};

    sqrt_.assign(p_, p_);
    for (unsigned x = 1; x < p_; ++x) sqrt_[(x * x) % p_] = std::min(sqrt_[(x * x) % p_], x);
    sqrt_[0] = 0;

    build_elements();
    build_classes();
    build_subgroups();
}

void Group::build_elements() {
    pack_index_.assign(static_cast<size_t>(p_) * p_ * p_ * p_, -1);
    for (unsigned a = 0; a < p_; ++a)
        for (unsigned b = 0; b < p_; ++b)
            for (unsigned c = 0; c < p_; ++c)
                for (unsigned d = 0; d < p_; ++d) {
                    if ((a * d + p_ * p_ - (b * c) % p_) % p_ == 0) continue;
                    unsigned packed = ((a * p_ + b) * p_ + c) * p_ + d;
                    pack_index_[packed] = static_cast<int>(elements_.size());
                    elements_.push_back(Mat2{a, b, c, d});
                }
    long long expected = static_cast<long long>(p_ * p_ - 1) * (p_ * p_ - p_);
    if (order() != expected) throw std::logic_error("Group: unexpected order");

    id_index_ = index_of(Mat2{1, 0, 0, 1});
    inv_index_.resize(elements_.size());
    for (int i = 0; i < size(); ++i) inv_index_[i] = index_of(inv(elements_[i]));
}

int Group::index_of(const Mat2& m) const {
    unsigned packed = ((m.a * p_ + m.b) * p_ + m.c) * p_ + m.d;
    int idx = pack_index_[packed];
    if (idx < 0) throw std::invalid_argument("Group: singular matrix");
    return idx;
}

Mat2 Group::mul(const Mat2& x, const Mat2& y) const {
    return Mat2{(x.a * y.a + x.b * y.c) % p_, (x.a * y.b + x.b * y.d) % p_,
                (x.c * y.a + x.d * y.c) % p_, (x.c * y.b + x.d * y.d) % p_};
}

Mat2 Group::inv(const Mat2& x) const {
    unsigned det = (x.a * x.d + p_ * p_ - (x.b * x.c) % p_) % p_;
    unsigned dinv = 1;
    for (unsigned e = 1; e < p_; ++e)
        if ((det * e) % p_ == 1) {
            dinv = e;
            break;
        }
    return Mat2{(x.d * dinv) % p_, ((p_ - x.b) % p_ * dinv) % p_,
                ((p_ - x.c) % p_ * dinv) % p_, (x.a * dinv) % p_};
}

unsigned Group::legendre(unsigned x) const {
    x %= p_;
    if (x == 0) return 0;
    return (sqrt_[x] < p_) ? 1 : p_ - 1;
}

void Group::build_classes() {
    unsigned inv2 = (p_ + 1) / 2;  // inverse of 2 mod p

    // Canonical enumeration: Central, Split, Jordan, NonSplit, each family in
    // ascending parameter order.
    for (unsigned x = 1; x < p_; ++x) {
        ConjClass c;
        c.kind = ClassKind::Central;
        c.x = x;
        c.size = 1;
        c.rep_index = index_of(Mat2{x, 0, 0, x});
        classes_.push_back(c);
    }
    for (unsigned x = 1; x < p_; ++x)
        for (unsigned y = x + 1; y < p_; ++y) {
            ConjClass c;
            c.kind = ClassKind::Split;
            c.x = x;
            c.y = y;
            c.size = static_cast<long long>(p_) * (p_ + 1);
            c.rep_index = index_of(Mat2{x, 0, 0, y});
            classes_.push_back(c);
        }
    for (unsigned x = 1; x < p_; ++x) {
        ConjClass c;
        c.kind = ClassKind::Jordan;
        c.x = x;
        c.size = static_cast<long long>(p_) * p_ - 1;
        c.rep_index = index_of(Mat2{x, 1, 0, x});
        classes_.push_back(c);
    }
    for (unsigned a = 0; a < p_; ++a)
        for (unsigned b = 1; b <= (p_ - 1) / 2; ++b) {
            ConjClass c;
            c.kind = ClassKind::NonSplit;
            c.z = Fp2El{a, b};
            c.size = static_cast<long long>(p_) * p_ - p_;
            c.rep_index = index_of(Mat2{a, (eps_ * b) % p_, b, a});
            classes_.push_back(c);
        }
    if (class_count() != static_cast<int>(p_ * p_ - 1))
        throw std::logic_error("Group: unexpected class count");

    // Lookup from canonical parameters to class position.
    auto class_lookup = [&](ClassKind kind, unsigned u, unsigned v) -> int {
        unsigned m = p_ - 1;
        switch (kind) {
            case ClassKind::Central:
                return static_cast<int>(u - 1);
            case ClassKind::Split: {
                // pairs (x,y), x<y, ordered by (x,y)
                unsigned before = (u - 1) * m - (u - 1) * u / 2;
                return static_cast<int>(m + before + (v - u - 1));
            }
            case ClassKind::Jordan:
                return static_cast<int>(m + m * (m - 1) / 2 + (u - 1));
            case ClassKind::NonSplit:
                return static_cast<int>(m + m * (m - 1) / 2 + m + u * ((p_ - 1) / 2) + (v - 1));
        }
        return -1;
    };
    for (int i = 0; i < class_count(); ++i) {
        const ConjClass& c = classes_[i];
        unsigned u = (c.kind == ClassKind::NonSplit) ? c.z.a : c.x;
        unsigned v = (c.kind == ClassKind::NonSplit) ? c.z.b : c.y;
        if (class_lookup(c.kind, u, v) != i) throw std::logic_error("Group: class order broken");
    }

    class_index_.resize(elements_.size());
    std::vector<long long> seen(classes_.size(), 0);
    for (int i = 0; i < size(); ++i) {
        const Mat2& g = elements_[i];
        unsigned tr = (g.a + g.d) % p_;
        unsigned det = (g.a * g.d + p_ * p_ - (g.b * g.c) % p_) % p_;
        unsigned disc = (tr * tr + 4 * p_ * p_ - 4 * det) % p_;
        int cls;
        if (disc == 0) {
            unsigned r = (tr * inv2) % p_;
            bool scalar = (g.b == 0 && g.c == 0 && g.a == g.d);
            cls = class_lookup(scalar ? ClassKind::Central : ClassKind::Jordan, r, 0);
        } else if (legendre(disc) == 1) {
            unsigned s = sqrt_[disc];
            unsigned r1 = ((tr + s) % p_) * inv2 % p_;
            unsigned r2 = ((tr + p_ - s) % p_) * inv2 % p_;
            cls = class_lookup(ClassKind::Split, std::min(r1, r2), std::max(r1, r2));
        } else {
            // disc = eps * t^2; the eigenvalue is (tr + t*sqrt(eps))/2.
            unsigned einv = 1;
            for (unsigned e = 1; e < p_; ++e)
                if ((eps_ * e) % p_ == 1) {
                    einv = e;
                    break;
                }
            unsigned t = sqrt_[(disc * einv) % p_];
            unsigned za = (tr * inv2) % p_;
            unsigned zb = (t * inv2) % p_;
            if (zb > (p_ - 1) / 2) zb = p_ - zb;
            cls = class_lookup(ClassKind::NonSplit, za, zb);
        }
        class_index_[i] = cls;
        ++seen[cls];
    }
    for (int i = 0; i < class_count(); ++i)
        if (seen[i] != classes_[i].size) throw std::logic_error("Group: class size mismatch");

    inverse_class_.resize(classes_.size());
    for (int i = 0; i < class_count(); ++i)
        inverse_class_[i] = class_index_[inv_index_[classes_[i].rep_index]];
}

int Group::class_of(const Mat2& m) const {
    return class_index_[index_of(m)];
}

void Group::build_subgroups() {
    subgroups_.resize(8);
    auto make = [&](SubgroupId id, std::vector<int> idx) {
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        Subgroup s;
        s.id = id;
        s.elements = std::move(idx);
        s.member.assign(elements_.size(), 0);
        for (int i : s.elements) s.member[i] = 1;
        s.order = static_cast<long long>(s.elements.size());
        subgroups_[static_cast<int>(id)] = std::move(s);
    };

    make(SubgroupId::Trivial, {id_index_});

    std::vector<int> torus;
    for (unsigned x = 1; x < p_; ++x)
        for (unsigned y = 1; y < p_; ++y) torus.push_back(index_of(Mat2{x, 0, 0, y}));
    make(SubgroupId::SplitTorus, torus);

    std::vector<int> norm = torus;
    Mat2 w{0, 1, 1, 0};
    for (int i : torus) norm.push_back(index_of(mul(elements_[i], w)));
    make(SubgroupId::SplitNormalizer, norm);

    std::vector<int> torus2;
    for (unsigned a = 0; a < p_; ++a)
        for (unsigned b = 0; b < p_; ++b) {
            if (a == 0 && b == 0) continue;
            torus2.push_back(index_of(Mat2{a, (eps_ * b) % p_, b, a}));
        }
    make(SubgroupId::NonsplitTorus, torus2);

    std::vector<int> norm2 = torus2;
    Mat2 s{1, 0, 0, p_ - 1};
    for (int i : torus2) norm2.push_back(index_of(mul(elements_[i], s)));
    make(SubgroupId::NonsplitNormalizer, norm2);

    std::vector<int> upper, lower;
    for (unsigned a = 1; a < p_; ++a)
        for (unsigned d = 1; d < p_; ++d)
            for (unsigned b = 0; b < p_; ++b) {
                upper.push_back(index_of(Mat2{a, b, 0, d}));
                lower.push_back(index_of(Mat2{a, 0, b, d}));
            }
    make(SubgroupId::BorelUpper, upper);
    make(SubgroupId::BorelLower, lower);

    std::vector<int> all(elements_.size());
    for (int i = 0; i < size(); ++i) all[i] = i;
    make(SubgroupId::Full, all);

    long long q = p_ - 1;
    long long expected[] = {1,
                            q * q,
                            2 * q * q,
                            static_cast<long long>(p_) * p_ - 1,
                            2 * (static_cast<long long>(p_) * p_ - 1),
                            p_ * q * q,
                            p_ * q * q,
                            order()};
    for (int i = 0; i < 8; ++i)
        if (subgroups_[i].order != expected[i]) throw std::logic_error("Group: subgroup order");
}

bool Group::set_product_is_group(SubgroupId h1, SubgroupId h2) const {
    const Subgroup& a = subgroup(h1);
    const Subgroup& b = subgroup(h2);
    std::vector<uint8_t> hit(elements_.size(), 0);
    long long count = 0;
    for (int i : a.elements)
        for (int j : b.elements) {
            int k = mul_index(i, j);
            if (!hit[k]) {
                hit[k] = 1;
                ++count;
            }
        }
    return count == order();
}

}  // namespace chen
