#include "refab/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "refab/json_io.hpp"

namespace refab {

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "latex") return Format::latex;
    if (name == "csv") return Format::csv;
    throw std::invalid_argument("unknown format: " + name);
}

namespace {

/* One monomial c * var^e, without the leading sign; c is positive here. */
std::string monomial_str(const Rat& c, const Rat& e, const std::string& var, bool latex) {
    std::string pow;
    if (!e.is_zero()) {
        if (e == Rat(1)) {
            pow = var;
        } else {
            std::string es = e.str();
            pow = latex ? var + "^{" + es + "}"
                        : var + "^" + (e.is_integer() ? es : "(" + es + ")");
        }
    }
    std::string coeff;
    if (pow.empty() || c != Rat(1)) {
        if (c.is_integer())
            coeff = c.str();
        else if (latex)
            coeff = "\\frac{" + c.num().get_str() + "}{" + c.den().get_str() + "}";
        else
            coeff = pow.empty() ? c.str() : "(" + c.str() + ")";
    }
    return coeff + pow;
}

/* Assemble "a - b + c" from (magnitude-rendered term, is-negative) pairs. */
std::string join_signed(const std::vector<std::pair<std::string, bool>>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (k == 0)
            out += pieces[k].second ? "-" : "";
        else
            out += pieces[k].second ? " - " : " + ";
        out += pieces[k].first;
    }
    return out;
}

std::string laurent_terms_str(const LaurentPoly& p, bool latex) {
    std::vector<std::pair<std::string, bool>> pieces;
    // descending exponent, the way these polynomials are written out
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Rat c = it->second;
        bool neg = c.sign() < 0;
        pieces.emplace_back(monomial_str(neg ? -c : c, it->first, "q", latex), neg);
    }
    return join_signed(pieces);
}

std::string series_terms_str(const Series& s, const std::string& var, bool latex) {
    std::vector<std::pair<std::string, bool>> pieces;
    for (long k = 0; k <= s.order(); ++k) {
        const Rat& c = s[k];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        pieces.emplace_back(monomial_str(neg ? -c : c, Rat(k), var, latex), neg);
    }
    std::string body = join_signed(pieces);
    std::string tail = std::to_string(s.order() + 1);
    if (latex) return body + " + O(" + var + "^{" + tail + "})";
    return body + " + O(" + var + "^" + tail + ")";
}

std::string npoly_terms_str(const NPoly& p, bool latex) {
    std::vector<std::pair<std::string, bool>> pieces;
    for (long k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff(k);
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        pieces.emplace_back(monomial_str(neg ? -c : c, Rat(k), "n", latex), neg);
    }
    return join_signed(pieces);
}

std::string rat_csv(const Rat& c) { return c.num().get_str() + "," + c.den().get_str(); }

}  // namespace

std::string render(const LaurentPoly& p, Format f) {
    switch (f) {
        case Format::text:
            return laurent_terms_str(p, false) + "\n";
        case Format::latex:
            return laurent_terms_str(p, true) + "\n";
        case Format::json:
            return canonical_dump(to_json(p));
        case Format::csv: {
            std::ostringstream os;
            os << "exp,num,den\n";
            for (const auto& [e, c] : p.terms()) os << e.str() << "," << rat_csv(c) << "\n";
            return os.str();
        }
    }
    throw std::logic_error("render: unhandled format");
}

std::string render(const Series& s, Format f, const std::string& var) {
    switch (f) {
        case Format::text:
            return series_terms_str(s, var, false) + "\n";
        case Format::latex:
            return series_terms_str(s, var, true) + "\n";
        case Format::json:
            return canonical_dump(to_json(s));
        case Format::csv: {
            std::ostringstream os;
            os << "k,num,den\n";
            for (long k = 0; k <= s.order(); ++k) os << k << "," << rat_csv(s[k]) << "\n";
            return os.str();
        }
    }
    throw std::logic_error("render: unhandled format");
}

std::string render(const NPoly& p, Format f) {
    switch (f) {
        case Format::text:
            return npoly_terms_str(p, false) + "\n";
        case Format::latex:
            return npoly_terms_str(p, true) + "\n";
        case Format::json:
            return canonical_dump(to_json(p));
        case Format::csv: {
            std::ostringstream os;
            os << "k,num,den\n";
            for (long k = 0; k <= std::max(p.degree(), 0L); ++k)
                os << k << "," << rat_csv(p.coeff(k)) << "\n";
            return os.str();
        }
    }
    throw std::logic_error("render: unhandled format");
}

std::string render(const ArInvariant& a, Format f) {
    switch (f) {
        case Format::text: {
            std::ostringstream os;
            os << "genus " << a.genus << ", imax " << a.imax << "\n";
            for (std::size_t i = 0; i < a.by_codegree.size(); ++i)
                os << "i=" << i << ": " << npoly_terms_str(a.by_codegree[i], false) << "\n";
            return os.str();
        }
        case Format::latex: {
            std::ostringstream os;
            for (std::size_t i = 0; i < a.by_codegree.size(); ++i)
                os << "Q_{" << a.genus << "," << i
                   << "}(n) = " << npoly_terms_str(a.by_codegree[i], true) << "\n";
            return os.str();
        }
        case Format::json:
            return canonical_dump(to_json(a));
        case Format::csv: {
            std::ostringstream os;
            os << "i,power,num,den\n";
            for (std::size_t i = 0; i < a.by_codegree.size(); ++i) {
                const NPoly& p = a.by_codegree[i];
                for (long k = 0; k <= std::max(p.degree(), 0L); ++k)
                    os << i << "," << k << "," << rat_csv(p.coeff(k)) << "\n";
            }
            return os.str();
        }
    }
    throw std::logic_error("render: unhandled format");
}

}  // namespace refab
