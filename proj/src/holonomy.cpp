#include "pants/holonomy.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace pants {

Word parse_word(const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        char g = tok[0];
        if (g != 'a' && g != 'b' && g != 'c') throw DomainError("bad word token '" + tok + "'");
        int e = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^' || tok.size() < 3) throw DomainError("bad word token '" + tok + "'");
            const char* first = tok.data() + 2;
            const char* last = tok.data() + tok.size();
            if (*first == '+') ++first;
            auto [ptr, ec] = std::from_chars(first, last, e);
            if (ec != std::errc() || ptr != last || e == 0)
                throw DomainError("bad exponent in word token '" + tok + "'");
        }
        w.push_back({g, e});
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string s;
    for (const Token& t : w) {
        if (!s.empty()) s += ' ';
        s += t.gen;
        if (t.exp != 1) s += "^" + std::to_string(t.exp);
    }
    return s;
}

Word inverse(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (Token& t : r) t.exp = -t.exp;
    return r;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

namespace {

RatioCheck check_ratios(const Mat3T<Quad>& m, double r1, double r2, double tol) {
    RatioCheck rc{};
    rc.eigenvalues = eigenvalues_real3(m);
    rc.predicted = {r1, r2};
    for (int k = 0; k < 2; ++k) {
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                double r = rc.eigenvalues[i] / rc.eigenvalues[j];
                best = std::min(best, std::abs(r - rc.predicted[k]) / std::abs(rc.predicted[k]));
            }
        rc.rel_error[k] = best;
    }
    rc.matched = rc.rel_error[0] <= tol && rc.rel_error[1] <= tol;
    return rc;
}

}  // namespace

EigenRatioReport eigenvalue_ratio_report(const FGCoords& c, double tol) {
    return eigenvalue_ratio_report(c, casimirs(c), tol);
}

EigenRatioReport eigenvalue_ratio_report(const FGCoords& c, const std::array<double, 6>& L, double tol) {
    // built in binary128: B can carry nearly repeated eigenvalues whose double
    // rounding alone would cost several digits
    FGCoordsT<Quad> q;
    for (int i = 0; i < 8; ++i) q.x[i] = Quad(c.x[i]);
    const Peripherals<Quad> p = peripheral_holonomies(q);
    EigenRatioReport rep{};
    rep.per[0] = check_ratios(p.A, L[0], L[1], tol);
    rep.per[1] = check_ratios(p.B, L[2], L[3], tol);
    rep.per[2] = check_ratios(p.C, L[4], L[5], tol);
    rep.all_match = true;
    rep.worst_rel_error = 0.0;
    for (const RatioCheck& r : rep.per) {
        rep.all_match = rep.all_match && r.matched;
        rep.worst_rel_error = std::max({rep.worst_rel_error, r.rel_error[0], r.rel_error[1]});
    }
    return rep;
}

}  // namespace pants
