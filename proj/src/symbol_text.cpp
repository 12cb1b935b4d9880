#include "subbergman/symbol_text.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace subbergman {

namespace {

std::string replace_unicode_minus(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
        } else {
            out.push_back(text[i]);
        }
    }
    return out;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

double parse_real(std::string_view s, std::string_view whole) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    std::string buf(s.front() == '+' ? s.substr(1) : s);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(buf, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed complex number '" + std::string(whole) + "'");
    }
    if (used != buf.size()) throw std::invalid_argument("malformed complex number '" + std::string(whole) + "'");
    return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::vector<cplx> parse_complex_list(std::string_view s) {
    std::vector<cplx> out;
    for (const auto& item : split(s, ',')) out.push_back(parse_complex(item));
    return out;
}

std::map<std::string, std::string> parse_fields(std::istringstream& in, std::string_view kind,
                                                std::initializer_list<std::string_view> allowed) {
    std::map<std::string, std::string> fields;
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("expected key=value in " + std::string(kind) + " symbol, got '" + token + "'");
        }
        std::string key = token.substr(0, eq);
        bool ok = false;
        for (auto a : allowed) ok = ok || key == a;
        if (!ok) throw std::invalid_argument("unknown field '" + key + "' for " + std::string(kind) + " symbol");
        fields[key] = token.substr(eq + 1);
    }
    return fields;
}

}  // namespace

cplx parse_complex(std::string_view raw) {
    const std::string text = trim(replace_unicode_minus(raw));
    if (text.empty()) throw std::invalid_argument("empty complex number");
    if (text.back() != 'i') return {parse_real(text, text), 0.0};
    const std::string body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not the leading one and not part of an exponent.
    std::size_t split_at = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    if (split_at == std::string::npos) return {0.0, parse_real(body, text)};
    return {parse_real(std::string_view(body).substr(0, split_at), text),
            parse_real(std::string_view(body).substr(split_at), text)};
}

std::string format_complex(cplx z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

SymbolSpec parse_symbol(std::string_view raw, std::optional<double> alpha) {
    const std::string text = trim(replace_unicode_minus(raw));
    std::istringstream in(text);
    std::string kind;
    in >> kind;
    if (kind == "identity") return PolynomialSpec({0.0, 1.0});
    if (kind == "series") {
        std::string rest;
        std::getline(in, rest);
        if (trim(rest).empty()) throw std::invalid_argument("series symbol needs coefficients");
        return PolynomialSpec(parse_complex_list(trim(rest)));
    }
    if (kind == "mobius") {
        auto f = parse_fields(in, kind, {"a", "zeta"});
        if (!f.contains("a")) throw std::invalid_argument("mobius symbol needs a=");
        return MobiusSpec(parse_complex(f["a"]), f.contains("zeta") ? parse_complex(f["zeta"]) : cplx{1.0, 0.0});
    }
    if (kind == "blaschke") {
        auto f = parse_fields(in, kind, {"zeros", "zeta"});
        if (!f.contains("zeros")) throw std::invalid_argument("blaschke symbol needs zeros=");
        return BlaschkeSpec(parse_complex_list(f["zeros"]),
                            f.contains("zeta") ? parse_complex(f["zeta"]) : cplx{1.0, 0.0});
    }
    if (kind == "monomial") {
        auto f = parse_fields(in, kind, {"n", "c"});
        if (!f.contains("n")) throw std::invalid_argument("monomial symbol needs n=");
        unsigned n = 0;
        const auto& ns = f["n"];
        const auto [ptr, ec] = std::from_chars(ns.data(), ns.data() + ns.size(), n);
        if (ec != std::errc{} || ptr != ns.data() + ns.size()) throw std::invalid_argument("bad monomial degree '" + ns + "'");
        if (f.contains("c")) return MonomialSpec(n, parse_complex(f["c"]));
        if (!alpha) throw std::invalid_argument("monomial without c= needs alpha to fix its CNP scale");
        return MonomialSpec::cnp_example(n, *alpha);
    }
    if (kind == "singular") {
        auto f = parse_fields(in, kind, {"c"});
        return SingularInnerSpec(f.contains("c") ? parse_real(f["c"], f["c"]) : 1.0);
    }
    throw std::invalid_argument("unknown symbol kind '" + kind + "'");
}

std::string format_symbol(const SymbolSpec& spec) {
    struct Visitor {
        std::string operator()(const MobiusSpec& m) const {
            return "mobius a=" + format_complex(m.a) + " zeta=" + format_complex(m.zeta);
        }
        std::string operator()(const BlaschkeSpec& b) const {
            std::string s = "blaschke zeros=";
            for (std::size_t k = 0; k < b.zeros.size(); ++k) s += (k ? "," : "") + format_complex(b.zeros[k]);
            return s + " zeta=" + format_complex(b.zeta);
        }
        std::string operator()(const MonomialSpec& m) const {
            return "monomial n=" + std::to_string(m.n) + " c=" + format_complex(m.c);
        }
        std::string operator()(const SingularInnerSpec& s) const {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", s.c);
            return std::string("singular c=") + buf;
        }
        std::string operator()(const PolynomialSpec& p) const {
            std::string s = "series ";
            for (std::size_t k = 0; k < p.coeffs.size(); ++k) s += (k ? "," : "") + format_complex(p.coeffs[k]);
            return s;
        }
    };
    return std::visit(Visitor{}, spec);
}

}  // namespace subbergman
