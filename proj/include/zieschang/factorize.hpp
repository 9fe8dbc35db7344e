// Factorization of elements of A_{g,p} into ADL / ADLH generator words by
// telescoping canonical edges around the Nielsen edges of a reduction.
#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "zieschang/gens.hpp"
#include "zieschang/groupoid.hpp"

namespace zieschang {

// For p >= 2 the special element is sigma_p, for p = 1 it is gamma_1. For
// p = 0, Stab means fixing x1' y1' x1 and StabTimesSpecial means fixing x1'
// (the coset reached through beta_1 alpha_1).
enum class CosetTag { Stab, StabTimesSpecial, StabTimesSpecialInv };

const char* coset_tag_name(CosetTag tag);

struct BaseLoop {
    Automorphism aut;  // loop at V_0
    CosetTag tag = CosetTag::Stab;
};

// Tag of a loop at V_0, or nullopt when it lies in none of the cosets.
std::optional<CosetTag> coset_tag(const Automorphism& loop);

struct ScriptMove {
    GroupoidEdge edge;
    std::string family;  // which edge family justified this move
};

// Moves whose composite is the rewritten edge; each move telescopes to a
// tagged base loop.
struct EdgeScript {
    std::vector<ScriptMove> moves;
};

// Memoized canonical edges for one signature.
class CanonicalCache {
public:
    explicit CanonicalCache(Signature sig) : sig_(sig) {}
    const Automorphism& phi(const Word& V);
    Signature sig() const { return sig_; }

private:
    Signature sig_;
    std::unordered_map<Word, Automorphism, WordHash> cache_;
};

EdgeScript edge_script(const GroupoidEdge& e, CanonicalCache& cache);

// Loops with compose(loops) = compose(invert(Phi_source), e.aut, Phi_target).
std::vector<BaseLoop> nielsen_to_base_loops(const GroupoidEdge& e, CanonicalCache& cache);
std::vector<BaseLoop> nielsen_to_base_loops(const GroupoidEdge& e);

// loop = eval(prefix) * stab * eval(suffix), stab in the stabilizer.
struct PeeledLoop {
    Automorphism stab;
    GenWord prefix;
    GenWord suffix;
};

PeeledLoop peel_special(const BaseLoop& l, Signature sig);

GenWord factorize_adl(const Automorphism& a);
GenWord factorize_adlh(const Automorphism& a);

}  // namespace zieschang
