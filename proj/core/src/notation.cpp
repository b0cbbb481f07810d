#include <pisot/notation.hpp>

#include <json.hpp>

#include <cctype>

namespace pisot {

namespace {

using nlohmann::json;

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool done() const { return pos_ == text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) || peek() == '['; }

    DigitWord digits() {
        DigitWord out;
        while (at_digit()) {
            if (accept('[')) {
                const std::size_t start = pos_;
                accept('-');
                while (std::isdigit(static_cast<unsigned char>(peek()))) {
                    ++pos_;
                }
                const std::string body(text_.substr(start, pos_ - start));
                if (body.empty() || body == "-") {
                    fail("empty bracketed digit");
                }
                out.push_back(std::stoi(body));
                expect(']');
            } else {
                out.push_back(text_[pos_++] - '0');
            }
        }
        return out;
    }

    void finish() {
        if (!done()) {
            fail("unexpected trailing input");
        }
    }

    [[noreturn]] void fail(const std::string &what) const {
        throw Error(ErrorKind::ParseError,
                    what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string head_text(const DigitWord &w) { return w.empty() ? "0" : to_text(w); }

DigitWord digits_field(const json &j, const char *key) {
    if (!j.contains(key)) {
        return {};
    }
    return j.at(key).get<DigitWord>();
}

json parse_object(std::string_view text, const char *side) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!j.is_object()) {
        throw Error(ErrorKind::ParseError, "word JSON must be an object");
    }
    if (j.contains("side") && j.at("side") != side) {
        throw Error(ErrorKind::ParseError, std::string("expected side \"") + side + "\"");
    }
    return j;
}

} // namespace

std::string to_text(const DigitWord &w) {
    std::string out;
    for (Digit d : w) {
        if (d >= 0 && d <= 9) {
            out += static_cast<char>('0' + d);
        } else {
            out += '[' + std::to_string(d) + ']';
        }
    }
    return out;
}

std::string to_text(const FiniteWord &w) {
    std::string out = head_text(w.integer_part());
    const DigitWord fraction = w.fraction_part();
    if (!fraction.empty()) {
        out += '.' + to_text(fraction);
    }
    return out;
}

std::string to_text(const RightWord &w) {
    std::string out = head_text(w.integer_part);
    if (!w.preperiod.empty() || !w.period.empty()) {
        out += '.' + to_text(w.preperiod);
    }
    if (!w.period.empty()) {
        out += '(' + to_text(w.period) + ")~";
    }
    return out;
}

std::string to_text(const LeftWord &w) {
    std::string out;
    if (!w.period.empty()) {
        out = "~(" + to_text(w.period) + ')' + to_text(w.head);
    } else {
        out = head_text(w.head);
    }
    if (!w.fraction.empty()) {
        out += '.' + to_text(w.fraction);
    }
    return out;
}

DigitWord parse_digits(std::string_view text) {
    Cursor c(text);
    DigitWord w = c.digits();
    c.finish();
    return w;
}

FiniteWord parse_finite_word(std::string_view text) {
    Cursor c(text);
    DigitWord integer_part = c.digits();
    DigitWord fraction;
    if (c.accept('.')) {
        fraction = c.digits();
    }
    c.finish();
    return FiniteWord::from_parts(integer_part, fraction);
}

RightWord parse_right_word(std::string_view text) {
    Cursor c(text);
    RightWord w;
    w.integer_part = c.digits();
    if (c.accept('.')) {
        w.preperiod = c.digits();
    }
    if (c.accept('(')) {
        w.period = c.digits();
        c.expect(')');
        c.accept('~');
    }
    c.finish();
    return w;
}

LeftWord parse_left_word(std::string_view text) {
    Cursor c(text);
    LeftWord w;
    if (c.accept('~')) {
        c.expect('(');
        w.period = c.digits();
        c.expect(')');
    }
    w.head = c.digits();
    if (c.accept('.')) {
        w.fraction = c.digits();
    }
    c.finish();
    return w;
}

std::string to_json(const LeftWord &w) {
    return json{{"period", w.period}, {"head", w.head}, {"fraction", w.fraction}, {"side", "left"}}.dump();
}

std::string to_json(const RightWord &w) {
    return json{{"period", w.period}, {"head", w.integer_part}, {"fraction", w.preperiod}, {"side", "right"}}
        .dump();
}

LeftWord left_word_from_json(std::string_view text) {
    const json j = parse_object(text, "left");
    try {
        return {digits_field(j, "period"), digits_field(j, "head"), digits_field(j, "fraction")};
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

RightWord right_word_from_json(std::string_view text) {
    const json j = parse_object(text, "right");
    try {
        return {digits_field(j, "head"), digits_field(j, "fraction"), digits_field(j, "period")};
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

} // namespace pisot
