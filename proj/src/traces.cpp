#include "pants/traces.hpp"

namespace pants {

CurveId parse_curve(const std::string& text) {
    if (text == "fig8") return CurveId::fig8();
    if (text == "fig8_inv") return CurveId::fig8_inv();
    if (text == "fig8_sym") return CurveId::fig8_sym();
    if (text == "commutator") return CurveId::commutator();
    if (text == "theta" || text == "theta_web") return CurveId::theta_web();
    if (text.rfind("power:", 0) == 0) {
        int k = 0;
        try {
            size_t used = 0;
            k = std::stoi(text.substr(6), &used);
            if (used != text.size() - 6) k = 0;
        } catch (const std::exception&) {
            k = 0;
        }
        if (k < 1) throw DomainError("power needs a positive integer, e.g. power:3");
        return CurveId::power(k);
    }
    if (text.rfind("word:", 0) == 0) return CurveId::from_word(parse_word(text.substr(5)));
    throw DomainError("unknown curve '" + text + "'");
}

std::string to_string(const CurveId& c) {
    switch (c.kind) {
        case CurveKind::fig8: return "fig8";
        case CurveKind::fig8_inv: return "fig8_inv";
        case CurveKind::fig8_sym: return "fig8_sym";
        case CurveKind::commutator: return "commutator";
        case CurveKind::power: return "power:" + std::to_string(c.k);
        case CurveKind::theta_web: return "theta";
        case CurveKind::word: return "word:" + to_string(c.word);
    }
    return "?";
}

Word curve_word(const CurveId& c) {
    switch (c.kind) {
        case CurveKind::fig8: return {{'a', 1}, {'c', -1}};
        case CurveKind::fig8_inv: return {{'c', 1}, {'a', -1}};
        case CurveKind::commutator: return {{'a', 1}, {'c', 1}, {'a', -1}, {'c', -1}};
        case CurveKind::power: return {{'a', c.k}, {'c', -1}};
        case CurveKind::word: return c.word;
        case CurveKind::fig8_sym:
        case CurveKind::theta_web: break;
    }
    throw DomainError("curve " + to_string(c) + " is not a single word");
}

bool has_closed_form(const LengthVector& L, const CurveId& c) {
    switch (c.kind) {
        case CurveKind::fig8:
        case CurveKind::fig8_inv:
        case CurveKind::fig8_sym:
        case CurveKind::theta_web: return true;
        case CurveKind::commutator:
        case CurveKind::power: return is_unipotent(L);
        case CurveKind::word: return false;
    }
    return false;
}

double theta_constant(const LengthVector& L) {
    const Peripherals<double> p = peripheral_holonomies(leaf_embed<double>(L, 1.0, 1.0));
    return trace3(p.A) * trace3(p.C);
}

}  // namespace pants
