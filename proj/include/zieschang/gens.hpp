// Named elements of A_{g,p}: the generators sigma_j, alpha_i, beta_i, gamma_i,
// the special elements eta and the flip lift, and words in the generators.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zieschang/endo.hpp"

namespace zieschang {

enum class Family { Sigma, Alpha, Beta, Gamma };

struct GenName {
    Family family = Family::Alpha;
    int index = 1;
    bool operator==(const GenName&) const = default;
};

struct GenToken {
    GenName name;
    int exponent = 1;  // +1 or -1
    bool operator==(const GenToken&) const = default;
};

class GenWord {
public:
    GenWord() = default;
    // Cancels adjacent inverse tokens.
    explicit GenWord(const std::vector<GenToken>& tokens);

    const std::vector<GenToken>& tokens() const { return tokens_; }
    std::size_t size() const { return tokens_.size(); }
    bool empty() const { return tokens_.empty(); }

    GenWord inverse() const;
    GenWord operator*(const GenWord& o) const;
    bool operator==(const GenWord& o) const { return tokens_ == o.tokens_; }

private:
    std::vector<GenToken> tokens_;
};

enum class GenVariant { ADL, ADLH };

bool valid_in(GenName name, Signature sig);
Automorphism generator(GenName name, Signature sig);
std::vector<GenName> gen_set(Signature sig, GenVariant variant);

Automorphism eta();
Automorphism zeta_lift(Signature sig);

Automorphism eval_gen_word(const GenWord& w, Signature sig);

// A word in ADLH names equal to alpha_i, i >= 3.
GenWord humphries_rewrite(int i, Signature sig);
// The 16-token word c with c' alpha_1 c = alpha_3.
GenWord humphries_conjugator();
// Replace every alpha_i with i >= 3 by humphries_rewrite(i).
GenWord to_adlh(const GenWord& w, Signature sig);

// Adds `shift` to every generator index.
GenWord shift_indices(const GenWord& w, int shift);
GenWord power(GenName name, int k);

GenName parse_gen_name(std::string_view token, int* exponent = nullptr);
std::string format_gen_name(GenName name);
GenWord parse_gen_word(std::string_view text);
std::string format_gen_word(const GenWord& w);

}  // namespace zieschang
