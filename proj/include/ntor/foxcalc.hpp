#pragma once

#include "ntor/errors.hpp"

#include <map>
#include <string>
#include <vector>

namespace ntor {

struct Letter {
    int gen;
    int exp;  // +1 or -1
    bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
    auto operator<=>(const Letter& o) const = default;
};

// Freely reduced word in the free group on generators 0..g-1.
class Word {
public:
    Word() = default;
    static Word from_letters(const std::vector<Letter>& ls);  // reduces
    static Word gen(int i, int e = 1);

    const std::vector<Letter>& letters() const { return l_; }
    bool empty() const { return l_.empty(); }
    size_t size() const { return l_.size(); }
    int max_generator() const;

    Word operator*(const Word& o) const;
    Word inverse() const;
    Word pow(int k) const;
    bool operator==(const Word& o) const { return l_ == o.l_; }
    bool operator<(const Word& o) const { return l_ < o.l_; }

    std::string str(const std::vector<std::string>& names) const;

private:
    std::vector<Letter> l_;
};

// Tokens "g", "g^-1", "g^3" separated by whitespace; "1" is the empty word.
Word parse_word(const std::string& text, const std::vector<std::string>& names, size_t offset = 0);

// Finite Z-linear combination of free-group words.
class GroupRingElement {
public:
    GroupRingElement() = default;
    static GroupRingElement of(const Word& w, long long c = 1);

    const std::map<Word, long long>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add(const Word& w, long long c);

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement operator-() const;
    bool operator==(const GroupRingElement& o) const { return t_ == o.t_; }
    long long augmentation() const;
    std::string str(const std::vector<std::string>& names) const;

private:
    std::map<Word, long long> t_;
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    int g() const { return static_cast<int>(generators.size()); }
    void validate(bool balanced) const;
};

struct IdentityFactor {
    Word w;
    int j;    // 0-based relator index
    int eps;  // +1 or -1
};

struct IdentityWord {
    std::vector<IdentityFactor> factors;
    std::string str(const std::vector<std::string>& names) const;
};

// "(w, j, +) (w, j, -) ..." with 0-based j; w uses the word grammar.
IdentityWord parse_identity(const std::string& text, const std::vector<std::string>& names);

// g, when given, bounds the generator index.
GroupRingElement fox_derivative(const Word& w, int i, int g = -1);
// Product over factors of w r_j^eps w^-1, freely reduced.
Word substitute(const Presentation& p, const IdentityWord& W);
bool verify_identity(const Presentation& p, const IdentityWord& W);

}  // namespace ntor
