#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chen {

/// 2x2 matrix over F_p with entries in [0, p).
struct Mat2 {
    unsigned a = 0, b = 0, c = 0, d = 0;
    bool operator==(const Mat2&) const = default;
};

enum class SubgroupId {
    Trivial,             // {1}
    SplitTorus,          // T: diagonal matrices
    SplitNormalizer,     // N: T together with the antidiagonal coset
    NonsplitTorus,       // T': multiplications by F_{p^2}^* in the basis {1, sqrt(eps)}
    NonsplitNormalizer,  // N': T' together with the Frobenius coset
    BorelUpper,          // B+: upper triangular
    BorelLower,          // B-: lower triangular
    Full,                // G itself
};

const char* subgroup_label(SubgroupId id);

/// Element of F_{p^2} written as a + b*sqrt(eps).
struct Fp2El {
    unsigned a = 0, b = 0;
    bool operator==(const Fp2El&) const = default;
};

/// Arithmetic in F_{p^2} = F_p(sqrt(eps)) for a fixed non-residue eps.
struct Fp2 {
    unsigned p = 0, eps = 0;

    unsigned encode(Fp2El z) const { return z.a * p + z.b; }
    Fp2El decode(unsigned i) const { return {i / p, i % p}; }
    bool in_base_field(Fp2El z) const { return z.b == 0; }

    Fp2El mul(Fp2El x, Fp2El y) const {
        return {(x.a * y.a + eps * (x.b * y.b)) % p, (x.a * y.b + x.b * y.a) % p};
    }
    Fp2El pow(Fp2El x, unsigned long long e) const {
        Fp2El r{1, 0};
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }
    Fp2El frobenius(Fp2El z) const { return {z.a, (p - z.b) % p}; }
    Fp2El negate(Fp2El z) const { return {(p - z.a) % p, (p - z.b) % p}; }
    unsigned norm(Fp2El z) const { return (z.a * z.a + p * p - eps * (z.b * z.b) % p) % p; }
};

enum class ClassKind { Central, Split, Jordan, NonSplit };

/// Conjugacy class of GL_2(F_p), identified by its kind and canonical
/// eigenvalue data: Central(x) and Jordan(x) carry x in F_p^*; Split carries
/// an unordered pair x < y; NonSplit carries z = a + b*sqrt(eps) in
/// F_{p^2} \ F_p with the Galois orbit {z, z^p} normalized to b <= (p-1)/2.
struct ConjClass {
    ClassKind kind;
    unsigned x = 0, y = 0;
    Fp2El z{};
    int rep_index = -1;
    long long size = 0;
    std::string label() const;
};

struct Subgroup {
    SubgroupId id;
    std::vector<int> elements;     // ascending element indices
    std::vector<uint8_t> member;   // indicator over all of G
    long long order = 0;
};

/// GL_2(F_p) with every element enumerated (lexicographic on (a,b,c,d)),
/// its conjugacy classes, and the subgroups used by the verifier.  p must be
/// an odd prime; p = 2 is rejected because the associated curve X(2) has
/// genus zero and there is nothing to verify.
class Group {
public:
    explicit Group(unsigned p, std::optional<unsigned> epsilon_override = std::nullopt);

    unsigned p() const { return p_; }
    unsigned epsilon() const { return eps_; }
    const Fp2& fp2() const { return fp2_; }

    int size() const { return static_cast<int>(elements_.size()); }
    long long order() const { return static_cast<long long>(elements_.size()); }

    const std::vector<Mat2>& elements() const { return elements_; }
    const Mat2& element(int i) const { return elements_[i]; }
    int index_of(const Mat2& m) const;
    int identity_index() const { return id_index_; }

    Mat2 mul(const Mat2& x, const Mat2& y) const;
    Mat2 inv(const Mat2& x) const;
    int mul_index(int i, int j) const { return index_of(mul(elements_[i], elements_[j])); }
    int inv_index(int i) const { return inv_index_[i]; }

    const Subgroup& subgroup(SubgroupId id) const { return subgroups_[static_cast<int>(id)]; }

    const std::vector<ConjClass>& classes() const { return classes_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    int class_of_index(int element_index) const { return class_index_[element_index]; }
    int class_of(const Mat2& m) const;
    int inverse_class(int class_index) const { return inverse_class_[class_index]; }
    long long centralizer_order(int class_index) const {
        return order() / classes_[class_index].size;
    }

    /// True when {h1*h2 : h1 in H1, h2 in H2} is all of G.
    bool set_product_is_group(SubgroupId h1, SubgroupId h2) const;

    unsigned legendre(unsigned x) const;  // 0, 1, or p-1 encoding -1

private:
    void build_elements();
    void build_classes();
    void build_subgroups();

    unsigned p_;
    unsigned eps_;
    Fp2 fp2_;
    std::vector<Mat2> elements_;
    std::vector<int> pack_index_;  // (a,b,c,d) packed -> element index or -1
    std::vector<int> inv_index_;
    std::vector<int> class_index_;
    std::vector<ConjClass> classes_;
    std::vector<int> inverse_class_;
    std::vector<Subgroup> subgroups_;
    std::vector<unsigned> sqrt_;  // sqrt_[x] = a square root of x, or p if none
    int id_index_ = -1;
};

bool is_prime(unsigned n);

/// Smallest positive quadratic non-residue mod p.
unsigned smallest_non_residue(unsigned p);

}  // namespace chen
