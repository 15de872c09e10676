#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zadual/half_int.hpp"

namespace zadual {

// Raised on malformed input or broken datum invariants (CLI exit code 2).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an internal consistency law fails (CLI exit code 3).
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GroupKind { SpEven, SOodd };

// Self-duality type of a supercuspidal GL-representation, read off from the
// type of its Langlands parameter.
enum class SelfDualType { None, Orthogonal, Symplectic };

enum class Sign { Plus, Minus, Unset };

inline Sign flip(Sign s) {
    if (s == Sign::Plus) return Sign::Minus;
    if (s == Sign::Minus) return Sign::Plus;
    return Sign::Unset;
}

inline Sign sign_pow(Sign s, int n) { return (n % 2 == 0) ? Sign::Plus : s; }

inline Sign sign_mul(Sign a, Sign b) {
    if (a == Sign::Unset || b == Sign::Unset)
        throw InternalError("sign_mul on Unset sign");
    return a == b ? Sign::Plus : Sign::Minus;
}

// sign of (-1)^n
inline Sign parity_sign(int n) { return (n % 2 == 0) ? Sign::Plus : Sign::Minus; }

enum class LineClass { Good, Bad, Ugly };
enum class ExpClass { Integral, HalfIntegral, Ugly };

// A declared supercuspidal label. Never resolved beyond these attributes.
struct Rho {
    std::string id;
    int dim = 1;
    SelfDualType self_dual = SelfDualType::None;
    std::string dual_id; // equals id iff self_dual != None

    bool is_self_dual() const { return self_dual != SelfDualType::None; }

    // The contragredient label (identity on self-dual labels).
    Rho dual() const {
        if (is_self_dual()) return *this;
        return Rho{dual_id, dim, SelfDualType::None, id};
    }

    // Lexicographically smaller id of the {rho, rho^vee} pair.
    const std::string& pair_rep() const {
        if (is_self_dual() || id <= dual_id) return id;
        return dual_id;
    }

    bool operator==(const Rho& o) const { return id == o.id; }
};

struct SigmaInfo {
    std::string id;
    int rank = 0;
    bool operator==(const SigmaInfo& o) const { return id == o.id && rank == o.rank; }
};

// Segment [x,y]_rho, a descending exponent chain; names the Steinberg
// representation Delta_rho[x,y]. x = y - 1 encodes the empty segment and is
// dropped by canonicalization; x < y - 1 is an error.
struct Segment {
    Rho rho;
    HalfInt x, y;

    bool is_empty() const { return x.twice == y.twice - 2; }
    int length() const { return x.int_diff(y) + 1; }
    int gl_size() const { return rho.dim * length(); }
    HalfInt center2() const { return HalfInt(x.twice + y.twice); } // x+y

    bool operator==(const Segment& o) const {
        return rho == o.rho && x == o.x && y == o.y;
    }
};

// rho boxtimes S_d with multiplicity and the value of eta on it.
// sign == Unset exactly for bad-parity blocks (eta factors through the
// cuspidal anchor there); those must have even multiplicity.
struct JordanBlock {
    Rho rho;
    int d = 1;
    int mult = 1;
    Sign sign = Sign::Unset;

    int dim() const { return rho.dim * d * mult; }

    bool operator==(const JordanBlock& o) const {
        return rho == o.rho && d == o.d && mult == o.mult && sign == o.sign;
    }
};

// Tempered part pi(phi, eta) plus an optional opaque cuspidal anchor sigma.
struct TemperedData {
    std::optional<SigmaInfo> sigma;
    std::vector<JordanBlock> blocks;

    bool operator==(const TemperedData& o) const {
        return sigma == o.sigma && blocks == o.blocks;
    }

    int mult_of(const Rho& rho, int d) const;
    Sign sign_of(const Rho& rho, int d) const; // Unset if absent or unsigned
    bool has_block(const Rho& rho, int d) const { return mult_of(rho, d) > 0; }
    // Adds mult copies of (rho, d) with the given sign. Merges with an
    // existing block; conflicting signs on one isomorphism class are an error.
    void add_block(const Rho& rho, int d, int mult, Sign sign);
    // Removes mult copies of (rho, d); underflow is an error.
    void remove_block(const Rho& rho, int d, int mult);
    // Total dim of the signed (good-parity) blocks.
    int signed_dim() const;
};

// Canonical name of an irreducible representation: ordered segments with the
// Langlands constraint plus tempered data.
struct LanglandsDatum {
    GroupKind group = GroupKind::SpEven;
    std::vector<Segment> segments;
    TemperedData temp;

    bool operator==(const LanglandsDatum& o) const {
        return group == o.group && segments == o.segments && temp == o.temp;
    }

    bool is_tempered() const { return segments.empty(); }
};

// Jantzen line key: a self-dual label with an exponent class, or the
// representative of an ugly pair.
struct LineKey {
    std::string rep_id;
    ExpClass cls = ExpClass::Integral;

    auto operator<=>(const LineKey&) const = default;
};

struct Factor {
    LineClass cls = LineClass::Good;
    LineKey line;           // meaningful for Bad and Ugly factors
    LanglandsDatum datum;
};

// Declaration registry built from the input header.
class RhoTable {
  public:
    void declare_rho(const Rho& rho);
    void declare_sigma(const SigmaInfo& sigma);

    const Rho& rho(const std::string& id) const;
    const SigmaInfo& sigma(const std::string& id) const;
    bool has_rho(const std::string& id) const { return rhos_.count(id) > 0; }
    bool has_sigma(const std::string& id) const { return sigmas_.count(id) > 0; }

    // The unique declared self-dual label; error if absent or ambiguous.
    const Rho& default_rho() const;

    const std::map<std::string, Rho>& rhos() const { return rhos_; }

  private:
    std::map<std::string, Rho> rhos_;
    std::map<std::string, SigmaInfo> sigmas_;
};

// --- classification -------------------------------------------------------

// Type of the dual-group parameters: orthogonal for Sp_{2n}, symplectic for
// SO_{2n+1}.
inline SelfDualType phi_type(GroupKind g) {
    return g == GroupKind::SpEven ? SelfDualType::Orthogonal : SelfDualType::Symplectic;
}

inline SelfDualType flip(SelfDualType t) {
    if (t == SelfDualType::Orthogonal) return SelfDualType::Symplectic;
    if (t == SelfDualType::Symplectic) return SelfDualType::Orthogonal;
    return SelfDualType::None;
}

// Type of rho boxtimes S_d: S_d is orthogonal for odd d, symplectic for even.
inline SelfDualType block_type(const Rho& rho, int d) {
    if (!rho.is_self_dual()) return SelfDualType::None;
    return d % 2 == 1 ? rho.self_dual : flip(rho.self_dual);
}

ExpClass exp_class_of(const Rho& rho, HalfInt x);
LineKey line_of(const Rho& rho, HalfInt x);
LineKey line_of_block(const Rho& rho, int d);
LineClass classify_line(const Rho& rho, ExpClass cls, GroupKind group);

// --- canonical form, validation, rank --------------------------------------

// Sorts segments by (x+y, x, rho.id), drops empty segments, re-bases ugly
// segments to the pair representative, merges blocks. Throws on segments
// with x < y - 1.
void canonicalize(LanglandsDatum& d);
LanglandsDatum canonicalized(LanglandsDatum d);

// Full invariant check; throws ValidationError with a diagnostic.
void validate(const LanglandsDatum& d);

// Rank n of the group the datum lives on.
int rank(const LanglandsDatum& d);

// Rewrites segments based at the pair-other label onto target_line's label:
// Delta_{rho^vee}[x,y] -> Delta_rho[-y,-x]. Other segments pass through.
std::vector<Segment> re_base(std::vector<Segment> segments, const Rho& target);

const char* to_string(GroupKind g);
const char* to_string(LineClass c);

} // namespace zadual
