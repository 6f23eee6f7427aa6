#include "geodetic/parse.hpp"

#include <cctype>

#include "json.hpp"

namespace geodetic {

namespace {

// Hand-rolled scanner; errors name the offending token.
class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}
    explicit Lexer(std::string&&) = delete;  // the lexer only borrows its input

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek_char() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    bool peek_alpha() {
        skip_ws();
        return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
    }

    Int integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected a number");
        return Int(text_.substr(start, pos_ - start), 10);  // base 10, leading zeros allowed
    }

    // INT or INT/INT, with an optional leading sign.
    Rat rational() {
        skip_ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        Int num = integer();
        Int den = 1;
        if (accept('/')) den = integer();
        Rat r{num, den};
        return neg ? -r : r;
    }

    std::string word() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) fail("expected a name");
        return text_.substr(start, pos_ - start);
    }

    [[noreturn]] void fail(const std::string& why) {
        skip_ws();
        std::string token = pos_ < text_.size() ? describe_token() : "end of input";
        throw ParseError(why + " at " + token + " in '" + text_ + "'");
    }

    void expect_end() {
        if (!at_end()) fail("unexpected trailing input");
    }

private:
    std::string describe_token() {
        size_t end = pos_;
        while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])))
            ++end;
        return "'" + text_.substr(pos_, std::min<size_t>(end - pos_, 16)) + "'";
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
};

// primary := RAT | '(' sum ')' | 'sqrt' (INT | '(' sum-free INT ')')
// product := primary { ('*' | '/') primary | primary }      (juxtaposition)
// sum     := [sign] product { ('+'|'-') product }
MultiQuadNumber mq_primary(Lexer& lex) {
    if (lex.peek_alpha()) {
        std::string w = lex.word();
        if (w != "sqrt") lex.fail("unknown name '" + w + "'");
        Int radicand;
        if (lex.accept('(')) {
            radicand = lex.integer();
            lex.expect(')');
        } else {
            radicand = lex.integer();
        }
        if (radicand < 1) lex.fail("radicand must be positive");
        return MultiQuadNumber::term(Rat(1), radicand);
    }
    if (lex.accept('(')) {
        Rat r = lex.rational();
        lex.expect(')');
        return MultiQuadNumber(r);
    }
    if (lex.peek_digit()) return MultiQuadNumber(lex.rational());
    lex.fail("expected a number or sqrt(...)");
}

bool starts_primary(Lexer& lex) {
    return lex.peek_digit() || lex.peek_char() == '(' || lex.peek_alpha();
}

MultiQuadNumber mq_product(Lexer& lex) {
    MultiQuadNumber acc = mq_primary(lex);
    while (true) {
        if (lex.accept('*')) {
            acc = acc * mq_primary(lex);
        } else if (lex.accept('/')) {
            acc = acc / mq_primary(lex);
        } else if (starts_primary(lex)) {
            acc = acc * mq_primary(lex);
        } else {
            return acc;
        }
    }
}

MultiQuadNumber mq_sum(Lexer& lex) {
    MultiQuadNumber acc;
    bool neg = lex.accept('-');
    if (!neg) lex.accept('+');
    acc = mq_product(lex);
    if (neg) acc = -acc;
    while (true) {
        if (lex.accept('+'))
            acc = acc + mq_product(lex);
        else if (lex.accept('-'))
            acc = acc - mq_product(lex);
        else
            return acc;
    }
}

// [(+|-) N*pi/2] at the current position; returns the quarter-turn offset.
Int parse_offset(Lexer& lex) {
    if (lex.at_end()) return 0;
    bool neg;
    if (lex.accept('+'))
        neg = false;
    else if (lex.accept('-'))
        neg = true;
    else
        lex.fail("expected '+' or '-' before a pi/2 offset");
    Int n = 1;
    if (lex.peek_digit()) {
        n = lex.integer();
        lex.expect('*');
    }
    std::string w = lex.word();
    if (w != "pi") lex.fail("expected pi in the offset");
    lex.expect('/');
    Int two = lex.integer();
    if (two != 2) lex.fail("offsets are multiples of pi/2");
    lex.expect_end();
    return neg ? Int(-n) : n;
}

PureAngle angle_from_ang_body(Lexer& lex) {
    lex.expect('(');
    Rat first = lex.rational();
    if (lex.accept('+')) {
        Rat r = lex.rational();
        lex.expect(')');
        if (!first.is_integer()) lex.fail("quarter-turn count must be an integer");
        return PureAngle(first.num(), r);
    }
    lex.expect(')');
    if (first.is_integer()) return PureAngle(first.num(), Rat(0));
    return PureAngle(0, first);
}

PureAngle angle_from_tangent(const MultiQuadNumber& tangent, const Int& offset) {
    if (tangent.is_zero()) return PureAngle(offset, Rat(0));
    if (!tangent.is_single_term())
        throw ParseError("tan= requires a single-radical tangent; use split for " +
                         tangent.str());
    const auto& [k, c] = *tangent.coeffs().begin();
    Rat t2 = c * c * Rat(k);
    if (c.sign() > 0) return PureAngle(offset, t2 / (Rat(1) + t2));
    return PureAngle(offset - 1, Rat(1) / (Rat(1) + t2));
}

}  // namespace

PureAngle parse_pure_angle(const std::string& text) {
    Lexer lex(text);
    std::string head = lex.word();
    if (head == "ang") {
        PureAngle a = angle_from_ang_body(lex);
        lex.expect_end();
        return a;
    }
    if (head == "sin" || head == "cos" || head == "tan") {
        bool squared = false;
        if (lex.peek_digit()) {
            Int two = lex.integer();
            if (two != 2) lex.fail("expected sin2=, cos2=, tan2= or tan=");
            squared = true;
        }
        lex.expect('=');
        if (!squared) {
            // tan=<multiquad>[offset]: split at a top-level sign before "pi"
            std::string rest = text.substr(text.find('=') + 1);
            size_t pi_pos = rest.find("pi");
            Int offset = 0;
            if (pi_pos != std::string::npos) {
                size_t cut = rest.find_last_of("+-", pi_pos);
                if (cut == std::string::npos) throw ParseError("malformed offset in '" + text + "'");
                std::string offset_text = rest.substr(cut);
                Lexer off(offset_text);
                offset = parse_offset(off);
                rest = rest.substr(0, cut);
            }
            MultiQuadNumber tangent = parse_multiquad(rest);
            return angle_from_tangent(tangent, offset);
        }
        Rat v = lex.rational();
        Rat r;
        if (head == "sin") {
            r = v;
        } else if (head == "cos") {
            r = Rat(1) - v;
        } else {
            if (v.sign() < 0) lex.fail("tan2 must be nonnegative");
            r = v / (Rat(1) + v);
        }
        if (r < Rat(0) || r > Rat(1))
            throw ParseError("squared trigonometric value out of range in '" + text + "'");
        Int offset = parse_offset(lex);
        return PureAngle(offset, r);
    }
    lex.fail("unknown angle form '" + head + "'");
}

MultiQuadNumber parse_multiquad(const std::string& text) {
    Lexer lex(text);
    MultiQuadNumber v = mq_sum(lex);
    lex.expect_end();
    return v;
}

GeodeticSum parse_geodetic_sum(const std::string& text) {
    if (text.find('=') != std::string::npos)
        return GeodeticSum{{{Rat(1), parse_pure_angle(text)}}};
    Lexer lex(text);
    GeodeticSum sum;
    bool first = true;
    while (true) {
        Rat sign(1);
        if (lex.accept('-'))
            sign = Rat(-1);
        else if (lex.accept('+'))
            sign = Rat(1);
        else if (!first)
            lex.fail("expected '+' or '-' between terms");
        Rat coeff(1);
        if (lex.peek_digit()) {
            coeff = lex.rational();
            lex.expect('*');
        }
        std::string w = lex.word();
        if (w != "ang") lex.fail("sum terms must be ang(...) angles");
        PureAngle angle = angle_from_ang_body(lex);
        sum.parts.emplace_back(sign * coeff, angle);
        if (lex.at_end()) return sum;
        first = false;
    }
}

namespace {

BasisKey parse_basis_key(Lexer& lex) {
    Int p = lex.integer();
    lex.expect('>');
    lex.expect('_');
    Int d = lex.integer();
    if (!is_prime(p)) lex.fail("basis index p must be prime");
    if (d < 1 || !is_squarefree(d)) lex.fail("basis index d must be square-free");
    if (!std::holds_alternative<Split>(split_type(p, d)))
        throw ParseError("<" + p.get_str() + ">_" + d.get_str() +
                         " is undefined: the prime does not split");
    return BasisKey{p, d};
}

}  // namespace

AngleCombo parse_angle_combo(const std::string& text) {
    Lexer lex(text);
    AngleCombo combo;
    bool first = true;
    while (true) {
        Rat sign(1);
        if (lex.accept('-'))
            sign = Rat(-1);
        else if (lex.accept('+'))
            sign = Rat(1);
        else if (!first)
            lex.fail("expected '+' or '-' between terms");
        Rat coeff(1);
        bool have_coeff = false;
        if (lex.peek_digit()) {
            coeff = lex.rational();
            have_coeff = true;
            if (!lex.accept('*') && lex.peek_char() != 'p' && lex.peek_char() != '<')
                lex.fail("expected '*', pi or a basis angle after a coefficient");
        }
        if (lex.peek_alpha()) {
            std::string w = lex.word();
            if (w != "pi") lex.fail("unknown symbol '" + w + "'");
            if (lex.accept('/')) coeff /= Rat(lex.integer());
            combo.set_t(combo.t() + sign * coeff);
        } else if (lex.accept('<')) {
            BasisKey key = parse_basis_key(lex);
            if (!have_coeff && lex.accept('^')) coeff = lex.rational();
            combo.add_term(key, sign * coeff);
        } else {
            lex.fail("expected pi or a basis angle <p>_d");
        }
        if (lex.at_end()) return combo;
        first = false;
    }
}

std::variant<PureAngle, AngleCombo> parse_dihedral(const std::string& text) {
    Lexer probe(text);
    if (probe.peek_alpha()) {
        Lexer look(text);
        std::string w = look.word();
        if (w == "ang" || w == "sin" || w == "cos" || w == "tan")
            return parse_pure_angle(text);
    }
    return parse_angle_combo(text);
}

namespace {

std::string pi_term(const Rat& t) {
    // "pi", "pi/2", "3*pi/4", "-pi/2", "2*pi"
    std::string out = t.sign() < 0 ? "-" : "";
    Rat a = t.abs();
    if (a.num() != 1) out += a.num().get_str() + "*";
    out += "pi";
    if (a.den() != 1) out += "/" + a.den().get_str();
    return out;
}

}  // namespace

std::string dihedral_to_string(const std::variant<PureAngle, AngleCombo>& dihedral) {
    if (std::holds_alternative<PureAngle>(dihedral))
        return std::get<PureAngle>(dihedral).str();
    const AngleCombo& combo = std::get<AngleCombo>(dihedral);
    std::string out;
    if (!combo.t().is_zero()) out = pi_term(combo.t());
    for (const auto& [key, coeff] : combo.terms()) {
        std::string piece = coeff.abs() == Rat(1) ? key.str() : coeff.abs().str() + "*" + key.str();
        if (out.empty())
            out = (coeff.sign() < 0 ? "-" : "") + piece;
        else
            out += (coeff.sign() < 0 ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
}

Polyhedron parse_polyhedron_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("polyhedron JSON: ") + e.what());
    }
    try {
        Polyhedron p;
        p.name = j.at("name").get<std::string>();
        if (j.contains("volume") && !j.at("volume").is_null()) {
            const auto& jv = j.at("volume");
            Volume v;
            std::string kind = jv.at("kind").get<std::string>();
            if (kind == "rational") {
                v.kind = Volume::Kind::rational;
                v.value = Rat::from_string(jv.at("value").get<std::string>());
            } else if (kind == "irrational") {
                v.kind = Volume::Kind::irrational;
                v.symbol = jv.at("symbol").get<std::string>();
            } else {
                throw ParseError("volume kind must be rational or irrational");
            }
            p.volume = v;
        }
        for (const auto& je : j.at("edges")) {
            Rat length = Rat::from_string(je.at("length").get<std::string>());
            Int count(je.at("count").get<long>());
            p.edges.emplace_back(length, count,
                                 parse_dihedral(je.at("dihedral").get<std::string>()));
        }
        if (p.edges.empty()) throw ParseError("polyhedron needs at least one edge orbit");
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("polyhedron JSON: ") + e.what());
    }
}

std::string polyhedron_to_json(const Polyhedron& p, int indent) {
    nlohmann::json j;
    j["name"] = p.name;
    if (p.volume) {
        if (p.volume->kind == Volume::Kind::rational)
            j["volume"] = {{"kind", "rational"}, {"value", p.volume->value.str()}};
        else
            j["volume"] = {{"kind", "irrational"}, {"symbol", p.volume->symbol}};
    } else {
        j["volume"] = nullptr;
    }
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : p.edges)
        j["edges"].push_back({{"length", e.length.str()},
                              {"count", static_cast<long>(e.count.get_si())},
                              {"dihedral", dihedral_to_string(e.dihedral)}});
    return j.dump(indent);
}

std::string combo_to_json(const AngleCombo& combo, int indent) {
    nlohmann::json j;
    j["t"] = combo.t().str();
    j["terms"] = nlohmann::json::array();
    for (const auto& [key, coeff] : combo.terms())
        j["terms"].push_back({{"p", static_cast<long>(key.p.get_si())},
                              {"d", static_cast<long>(key.d.get_si())},
                              {"coeff", coeff.str()}});
    return j.dump(indent);
}

AngleCombo combo_from_json(const std::string& json_text) {
    try {
        nlohmann::json j = nlohmann::json::parse(json_text);
        AngleCombo combo;
        combo.set_t(Rat::from_string(j.at("t").get<std::string>()));
        for (const auto& jt : j.at("terms"))
            combo.add_term(BasisKey{Int(jt.at("p").get<long>()), Int(jt.at("d").get<long>())},
                           Rat::from_string(jt.at("coeff").get<std::string>()));
        return combo;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("combo JSON: ") + e.what());
    }
}

std::string sum_to_json(const GeodeticSum& sum, int indent) {
    nlohmann::json j;
    j["parts"] = nlohmann::json::array();
    for (const auto& [coeff, angle] : sum.parts)
        j["parts"].push_back({{"coeff", coeff.str()},
                              {"n", static_cast<long>(angle.n.get_si())},
                              {"r", angle.r.str()}});
    return j.dump(indent);
}

GeodeticSum sum_from_json(const std::string& json_text) {
    try {
        nlohmann::json j = nlohmann::json::parse(json_text);
        GeodeticSum sum;
        for (const auto& jp : j.at("parts"))
            sum.parts.emplace_back(Rat::from_string(jp.at("coeff").get<std::string>()),
                                   PureAngle(Int(jp.at("n").get<long>()),
                                             Rat::from_string(jp.at("r").get<std::string>())));
        return sum;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("sum JSON: ") + e.what());
    }
}

}  // namespace geodetic
