#include "ntor/foxcalc.hpp"

#include <cctype>
#include <sstream>

namespace ntor {

Word Word::from_letters(const std::vector<Letter>& ls)
{
    Word w;
    for (const Letter& l : ls) {
        if (l.exp != 1 && l.exp != -1) throw ValidationError("letter exponent must be +-1");
        if (!w.l_.empty() && w.l_.back().gen == l.gen && w.l_.back().exp == -l.exp) w.l_.pop_back();
        else w.l_.push_back(l);
    }
    return w;
}

Word Word::gen(int i, int e)
{
    if (i < 0) throw ValidationError("negative generator index");
    std::vector<Letter> ls(static_cast<size_t>(std::abs(e)), Letter{i, e > 0 ? 1 : -1});
    return from_letters(ls);
}

int Word::max_generator() const
{
    int m = -1;
    for (const auto& l : l_) m = std::max(m, l.gen);
    return m;
}

Word Word::operator*(const Word& o) const
{
    Word w = *this;
    for (const Letter& l : o.l_) {
        if (!w.l_.empty() && w.l_.back().gen == l.gen && w.l_.back().exp == -l.exp) w.l_.pop_back();
        else w.l_.push_back(l);
    }
    return w;
}

Word Word::inverse() const
{
    Word w;
    for (auto it = l_.rbegin(); it != l_.rend(); ++it) w.l_.push_back({it->gen, -it->exp});
    return w;
}

Word Word::pow(int k) const
{
    Word base = k < 0 ? inverse() : *this;
    Word r;
    for (int i = 0; i < std::abs(k); ++i) r = r * base;
    return r;
}

std::string Word::str(const std::vector<std::string>& names) const
{
    if (l_.empty()) return "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < l_.size()) {
        size_t j = i;
        while (j < l_.size() && l_[j] == l_[i]) ++j;
        int e = static_cast<int>(j - i) * l_[i].exp;
        const std::string& nm = l_[i].gen < static_cast<int>(names.size()) ? names[l_[i].gen]
                                                                           : "x" + std::to_string(l_[i].gen);
        os << (first ? "" : " ") << nm;
        if (e != 1) os << "^" << e;
        first = false;
        i = j;
    }
    return os.str();
}

Word parse_word(const std::string& text, const std::vector<std::string>& names, size_t offset)
{
    std::vector<Letter> ls;
    size_t i = 0;
    bool any = false;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        size_t st = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '^') ++i;
        std::string name = text.substr(st, i - st);
        if (name.empty()) throw ParseError("missing generator name", offset + st);
        int e = 1;
        if (i < text.size() && text[i] == '^') {
            size_t es = ++i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            size_t ds = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (ds == i) throw ParseError("expected integer exponent", offset + es);
            if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
                throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", offset + i);
            e = std::stoi(text.substr(es, i - es));
        }
        if (name == "1") {
            if (e != 1) throw ParseError("exponent on the identity", offset + st);
            any = true;
            continue;
        }
        int g = -1;
        for (size_t k = 0; k < names.size(); ++k)
            if (names[k] == name) g = static_cast<int>(k);
        if (g < 0) throw ParseError("unknown generator '" + name + "'", offset + st);
        for (int k = 0; k < std::abs(e); ++k) ls.push_back({g, e > 0 ? 1 : -1});
        any = true;
    }
    if (!any) throw ParseError("empty word (write 1 for the identity)", offset);
    return Word::from_letters(ls);
}

// ---------------------------------------------------------------- group ring

GroupRingElement GroupRingElement::of(const Word& w, long long c)
{
    GroupRingElement e;
    e.add(w, c);
    return e;
}

void GroupRingElement::add(const Word& w, long long c)
{
    if (c == 0) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
    } else if ((it->second += c) == 0) {
        t_.erase(it);
    }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const
{
    GroupRingElement r = *this;
    for (const auto& [w, c] : o.t_) r.add(w, c);
    return r;
}

GroupRingElement GroupRingElement::operator-() const
{
    GroupRingElement r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const { return *this + (-o); }

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const
{
    GroupRingElement r;
    for (const auto& [a, ca] : t_)
        for (const auto& [b, cb] : o.t_) r.add(a * b, ca * cb);
    return r;
}

long long GroupRingElement::augmentation() const
{
    long long s = 0;
    for (const auto& [w, c] : t_) s += c;
    return s;
}

std::string GroupRingElement::str(const std::vector<std::string>& names) const
{
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : t_) {
        long long m = c < 0 ? -c : c;
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        if (w.empty()) os << m;
        else {
            if (m != 1) os << m << "*";
            os << (w.size() > 1 ? "(" + w.str(names) + ")" : w.str(names));
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- presentations

void Presentation::validate(bool balanced) const
{
    for (size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].empty()) throw ValidationError("empty generator name");
        for (size_t k = 0; k < i; ++k)
            if (generators[k] == generators[i]) throw ValidationError("duplicate generator '" + generators[i] + "'");
    }
    for (const auto& r : relators)
        if (r.max_generator() >= g()) throw ValidationError("relator uses an undeclared generator");
    if (balanced && relators.size() != generators.size())
        throw ValidationError("presentation must have as many relators as generators (have " +
                              std::to_string(relators.size()) + " for " + std::to_string(generators.size()) + ")");
}

std::string IdentityWord::str(const std::vector<std::string>& names) const
{
    std::ostringstream os;
    for (size_t k = 0; k < factors.size(); ++k)
        os << (k ? " " : "") << "(" << factors[k].w.str(names) << ", " << factors[k].j << ", "
           << (factors[k].eps > 0 ? "+" : "-") << ")";
    return os.str();
}

IdentityWord parse_identity(const std::string& text, const std::vector<std::string>& names)
{
    IdentityWord W;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i == text.size()) throw ParseError("empty identity", 0);
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '('", i);
        size_t open = i++;
        size_t c1 = text.find(',', i);
        if (c1 == std::string::npos) throw ParseError("expected ',' after conjugator", i);
        Word w = parse_word(text.substr(i, c1 - i), names, i);
        i = c1 + 1;
        skip();
        size_t ds = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (ds == i) throw ParseError("expected relator index", ds);
        int j = std::stoi(text.substr(ds, i - ds));
        skip();
        if (i >= text.size() || text[i] != ',') throw ParseError("expected ',' after relator index", i);
        ++i;
        skip();
        if (i >= text.size() || (text[i] != '+' && text[i] != '-')) throw ParseError("expected sign '+' or '-'", i);
        int eps = text[i] == '+' ? 1 : -1;
        ++i;
        if (i < text.size() && text[i] == '1') ++i;  // accept +1 / -1
        skip();
        if (i >= text.size() || text[i] != ')') throw ParseError("missing ')' for '(' opened", open);
        ++i;
        W.factors.push_back({w, j, eps});
        skip();
    }
    return W;
}

GroupRingElement fox_derivative(const Word& w, int i, int g)
{
    if (i < 0 || (g >= 0 && i >= g)) throw ValidationError("generator index out of range");
    GroupRingElement out;
    Word pre;
    for (const Letter& l : w.letters()) {
        if (l.gen == i) {
            if (l.exp == 1) out.add(pre, 1);
            else out.add(pre * Word::gen(i, -1), -1);
        }
        pre = pre * Word::from_letters({l});
    }
    return out;
}

Word substitute(const Presentation& p, const IdentityWord& W)
{
    Word r;
    for (const auto& f : W.factors) {
        if (f.j < 0 || f.j >= static_cast<int>(p.relators.size()))
            throw ValidationError("identity refers to relator " + std::to_string(f.j) + " out of range");
        const Word& rel = p.relators[f.j];
        r = r * f.w * (f.eps > 0 ? rel : rel.inverse()) * f.w.inverse();
    }
    return r;
}

bool verify_identity(const Presentation& p, const IdentityWord& W) { return substitute(p, W).empty(); }

}  // namespace ntor
