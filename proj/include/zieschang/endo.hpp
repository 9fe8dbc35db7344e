// Endomorphisms and witnessed automorphisms of the free group, acting on the
// right: compose(f, g) applies f first.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zieschang/core.hpp"

namespace zieschang {

class Endomorphism {
public:
    Endomorphism() = default;
    explicit Endomorphism(Signature sig);  // identity
    Endomorphism(Signature sig, std::vector<Word> images);

    static Endomorphism identity(Signature sig) { return Endomorphism(sig); }
    // Identity except for the listed basis-letter images. A key may be an
    // inverse letter; its image is then inverted.
    static Endomorphism from_map(Signature sig, const std::vector<std::pair<Letter, Word>>& moves);

    Signature sig() const { return sig_; }
    const std::vector<Word>& images() const { return images_; }
    // Image of a signed letter.
    Word image(Letter l) const;
    bool is_identity() const;
    std::size_t max_image_length() const;

    bool operator==(const Endomorphism& o) const {
        return sig_ == o.sig_ && images_ == o.images_;
    }

private:
    Signature sig_{};
    std::vector<Word> images_;
};

Word apply(const Endomorphism& f, const Word& u);
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

class Automorphism {
public:
    Automorphism() = default;
    // Checks that fwd and inv are mutually inverse; throws WitnessInvalid.
    Automorphism(Endomorphism fwd, Endomorphism inv);
    static Automorphism identity(Signature sig);
    // For callers that already know the witness is valid (products of
    // witnessed automorphisms).
    static Automorphism trusted(Endomorphism fwd, Endomorphism inv);

    const Endomorphism& fwd() const { return fwd_; }
    const Endomorphism& inv() const { return inv_; }
    Signature sig() const { return fwd_.sig(); }

    bool operator==(const Automorphism& o) const { return fwd_ == o.fwd_; }

private:
    Endomorphism fwd_;
    Endomorphism inv_;
};

Word apply(const Automorphism& a, const Word& u);
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism compose(std::initializer_list<Automorphism> as);
Automorphism invert(const Automorphism& a);
// Inner automorphism u -> w' u w.
Automorphism inner(Signature sig, const Word& w);

struct TPermutation {
    std::vector<int> image;  // image[j-1] = pi(j), 1-based values
    bool operator==(const TPermutation&) const = default;
    bool is_identity() const;
};

struct LetterPermutation {
    TPermutation t;
    // Image letter of each positive x-letter basis element, in basis order.
    std::vector<Letter> x_images;
};

std::optional<LetterPermutation> classify_letters(const Endomorphism& f);

// pi with [t_j]^f = [t_pi(j)] when it exists.
std::optional<TPermutation> t_class_permutation(const Endomorphism& f);

struct Membership {
    bool fixes_relator = false;
    std::optional<TPermutation> permutes_t_classes;
    bool in_A = false;
};

Membership membership(const Endomorphism& f);

// w with apply(a,u) = conjugate(apply(b,u), w) for every basis letter u.
std::optional<Word> outer_equal(const Automorphism& a, const Automorphism& b);

// Stab(t_p; A_{g,p}) -> A_{g,p-1}.
Automorphism restrict_drop_tp(const Automorphism& a);
// Stab(x1' y1' x1; A_{g,0}) -> A_{g-1,1} via y1 -> t1, x_i -> x_{i-1}, y_i -> y_{i-1}.
Automorphism restrict_relabel_K(const Automorphism& a);

// Text format: "sig g=<g> p=<p>" then "<letter> -> <word>" lines.
std::string format_endomorphism(const Endomorphism& f);
Endomorphism parse_endomorphism(const std::string& text);
Signature parse_signature_header(const std::string& line);

}  // namespace zieschang
