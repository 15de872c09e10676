#include "zadual/parse.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace zadual {

namespace {

// Minimal cursor over one expression; errors report the 1-based column.
class Cursor {
  public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
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

    bool accept_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    int parse_int() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits) fail("expected an integer");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    HalfInt parse_half() {
        int n = parse_int();
        skip_ws();
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' && text_[pos_ + 1] == '2') {
            pos_ += 2;
            return HalfInt(n);
        }
        return HalfInt::whole(n);
    }

    std::string parse_ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected an identifier");
        return std::string(text_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ValidationError("col " + std::to_string(pos_ + 1) + ": " + msg);
    }

  private:
    std::string_view text_;
    size_t pos_ = 0;
};

Rho rho_or_default(Cursor& cur, const RhoTable& table) {
    if (cur.accept('@')) return table.rho(cur.parse_ident());
    return table.default_rho();
}

Sign parse_sign_char(Cursor& cur) {
    if (cur.accept('+')) return Sign::Plus;
    if (cur.accept('-')) return Sign::Minus;
    if (cur.accept('.')) return Sign::Unset;
    cur.fail("expected '+', '-' or '.' after block size");
}

TemperedData parse_temp(Cursor& cur, const RhoTable& table) {
    TemperedData temp;
    if (!cur.accept_word("pi")) cur.fail("expected 'pi'");
    cur.expect('(');
    if (!cur.accept(')')) {
        do {
            JordanBlock b;
            b.d = cur.parse_int();
            b.sign = parse_sign_char(cur);
            b.rho = rho_or_default(cur, table);
            b.mult = cur.accept('^') ? cur.parse_int() : 1;
            temp.blocks.push_back(b);
        } while (cur.accept(','));
        cur.expect(')');
    }
    if (cur.accept('*')) temp.sigma = table.sigma(cur.parse_ident());
    return temp;
}

std::string sign_char(Sign s) {
    switch (s) {
        case Sign::Plus: return "+";
        case Sign::Minus: return "-";
        default: return ".";
    }
}

} // namespace

bool parse_header_line(std::string_view line, RhoTable& table, GroupKind& group,
                       bool& group_seen) {
    Cursor cur(line);
    if (cur.accept_word("group")) {
        if (cur.accept_word("Sp"))
            group = GroupKind::SpEven;
        else if (cur.accept_word("SO"))
            group = GroupKind::SOodd;
        else
            cur.fail("expected 'Sp' or 'SO'");
        group_seen = true;
        if (!cur.at_end()) cur.fail("trailing input after group declaration");
        return true;
    }
    if (cur.accept_word("rho ") || cur.accept_word("rho\t")) {
        Rho rho;
        rho.id = cur.parse_ident();
        bool has_type = false;
        while (!cur.at_end()) {
            std::string key = cur.parse_ident();
            cur.expect('=');
            if (key == "dim") {
                rho.dim = cur.parse_int();
            } else if (key == "type") {
                std::string v = cur.parse_ident();
                if (v == "orth")
                    rho.self_dual = SelfDualType::Orthogonal;
                else if (v == "symp")
                    rho.self_dual = SelfDualType::Symplectic;
                else if (v == "none")
                    rho.self_dual = SelfDualType::None;
                else
                    cur.fail("type must be orth|symp|none");
                has_type = true;
            } else if (key == "dual") {
                rho.dual_id = cur.parse_ident();
            } else {
                cur.fail("unknown rho attribute '" + key + "'");
            }
        }
        if (!has_type) cur.fail("rho declaration needs type=");
        if (rho.is_self_dual())
            rho.dual_id = rho.id;
        else if (rho.dual_id.empty())
            cur.fail("non-self-dual rho needs dual=");
        table.declare_rho(rho);
        return true;
    }
    if (cur.accept_word("sigma ") || cur.accept_word("sigma\t")) {
        SigmaInfo s;
        s.id = cur.parse_ident();
        std::string key = cur.parse_ident();
        cur.expect('=');
        if (key != "rank") cur.fail("expected rank=");
        s.rank = cur.parse_int();
        if (!cur.at_end()) cur.fail("trailing input after sigma declaration");
        table.declare_sigma(s);
        return true;
    }
    return false;
}

LanglandsDatum parse_rep(std::string_view text, const RhoTable& table, GroupKind group) {
    Cursor cur(text);
    LanglandsDatum d;
    d.group = group;
    if (cur.peek() == 'L') {
        cur.accept('L');
        cur.expect('(');
        do {
            if (!cur.accept_word("D[")) cur.fail("expected segment 'D[x,y]'");
            Segment seg;
            seg.x = cur.parse_half();
            cur.expect(',');
            seg.y = cur.parse_half();
            cur.expect(']');
            seg.rho = rho_or_default(cur, table);
            if (!seg.x.same_class(seg.y))
                cur.fail("segment endpoints differ by a non-integer");
            if (seg.x < seg.y && !seg.is_empty()) cur.fail("segment has x < y");
            d.segments.push_back(seg);
        } while (cur.accept(','));
        cur.expect(';');
        d.temp = parse_temp(cur, table);
        cur.expect(')');
    } else {
        d.temp = parse_temp(cur, table);
    }
    if (!cur.at_end()) cur.fail("trailing input after expression");
    canonicalize(d);
    validate(d);
    return d;
}

std::string format_rep(const LanglandsDatum& d, const RhoTable& table) {
    const Rho* def = nullptr;
    try {
        def = &table.default_rho();
    } catch (const ValidationError&) {
        def = nullptr;
    }
    auto rho_suffix = [&](const Rho& r) {
        return (def && r == *def) ? std::string() : "@" + r.id;
    };

    std::ostringstream out;
    if (!d.segments.empty()) {
        out << "L(";
        for (size_t i = 0; i < d.segments.size(); ++i) {
            if (i) out << ",";
            const auto& s = d.segments[i];
            out << "D[" << s.x.str() << "," << s.y.str() << "]" << rho_suffix(s.rho);
        }
        out << ";";
    }
    out << "pi(";
    bool first = true;
    for (const auto& b : d.temp.blocks) {
        for (int i = 0; i < b.mult; ++i) {
            if (!first) out << ",";
            first = false;
            out << b.d << sign_char(b.sign) << rho_suffix(b.rho);
        }
    }
    out << ")";
    if (d.temp.sigma) out << "*" << d.temp.sigma->id;
    if (!d.segments.empty()) out << ")";
    return out.str();
}

std::string format_point(const Rho& rho, HalfInt x, const RhoTable& table) {
    std::string id = rho.id;
    try {
        if (rho == table.default_rho()) id.clear();
    } catch (const ValidationError&) {
    }
    return (id.empty() ? "" : id) + ":" + x.str();
}

LanglandsDatum parse_rep_json(std::string_view json_text, const RhoTable& table) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("json: ") + e.what());
    }
    try {
        LanglandsDatum d;
        std::string g = j.at("group").get<std::string>();
        if (g == "Sp")
            d.group = GroupKind::SpEven;
        else if (g == "SO")
            d.group = GroupKind::SOodd;
        else
            throw ValidationError("json: group must be \"Sp\" or \"SO\"");
        for (const auto& js : j.at("segments")) {
            Segment s;
            s.rho = table.rho(js.at("rho").get<std::string>());
            s.x = HalfInt(js.at("x2").get<int>());
            s.y = HalfInt(js.at("y2").get<int>());
            d.segments.push_back(s);
        }
        const auto& jt = j.at("temp");
        if (!jt.at("sigma").is_null())
            d.temp.sigma = table.sigma(jt.at("sigma").get<std::string>());
        for (const auto& jb : jt.at("blocks")) {
            JordanBlock b;
            b.rho = table.rho(jb.at("rho").get<std::string>());
            b.d = jb.at("d").get<int>();
            b.mult = jb.at("mult").get<int>();
            std::string s = jb.at("sign").get<std::string>();
            if (s == "+")
                b.sign = Sign::Plus;
            else if (s == "-")
                b.sign = Sign::Minus;
            else if (s == ".")
                b.sign = Sign::Unset;
            else
                throw ValidationError("json: sign must be \"+\", \"-\" or \".\"");
            d.temp.blocks.push_back(b);
        }
        canonicalize(d);
        validate(d);
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("json: ") + e.what());
    }
}

std::string format_rep_json(const LanglandsDatum& d) {
    nlohmann::json j;
    j["group"] = d.group == GroupKind::SpEven ? "Sp" : "SO";
    j["segments"] = nlohmann::json::array();
    for (const auto& s : d.segments)
        j["segments"].push_back({{"rho", s.rho.id}, {"x2", s.x.twice}, {"y2", s.y.twice}});
    j["temp"]["sigma"] = d.temp.sigma ? nlohmann::json(d.temp.sigma->id) : nlohmann::json();
    j["temp"]["blocks"] = nlohmann::json::array();
    for (const auto& b : d.temp.blocks)
        j["temp"]["blocks"].push_back({{"rho", b.rho.id},
                                       {"d", b.d},
                                       {"mult", b.mult},
                                       {"sign", sign_char(b.sign)}});
    return j.dump();
}

} // namespace zadual
