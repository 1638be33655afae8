#include "semitoric/coefficients.hpp"

#include "semitoric/errors.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace semitoric::coeffs {

extern const char* kEmbeddedTables;  // generated from data/coefficients.txt

namespace {

// Compiled expression: RPN over a small opcode set.
enum class Op : unsigned char { PushConst, PushR, PushT, PushRA, PushSqrtR, Add, Sub, Mul, Neg, Pow };

struct Instr {
    Op op;
    double value = 0.0;  // PushConst
    int expo = 0;        // Pow
};

using Code = std::vector<Instr>;

class Parser {
  public:
    explicit Parser(std::string_view s) : s_(s) {}

    Code parse() {
        Code code;
        expr(code);
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return code;
    }

  private:
    std::string_view s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw std::runtime_error("coefficient expression parse error: " + msg + " in '" +
                                 std::string(s_) + "' at " + std::to_string(pos_));
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expr(Code& code) {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        term(code);
        if (neg) code.push_back({Op::Neg});
        while (true) {
            if (eat('+')) {
                term(code);
                code.push_back({Op::Add});
            } else if (eat('-')) {
                term(code);
                code.push_back({Op::Sub});
            } else {
                break;
            }
        }
    }

    void term(Code& code) {
        factor(code);
        while (eat('*')) {
            factor(code);
            code.push_back({Op::Mul});
        }
    }

    void factor(Code& code) {
        base(code);
        if (eat('^')) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            code.push_back({Op::Pow, 0.0, std::stoi(std::string(s_.substr(start, pos_ - start)))});
        }
    }

    void base(Code& code) {
        skip_ws();
        if (eat('(')) {
            expr(code);
            if (!eat(')')) fail("expected ')'");
            return;
        }
        if (eat('-')) {  // unary minus on a factor
            base(code);
            code.push_back({Op::Neg});
            return;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
                ++pos_;
            code.push_back({Op::PushConst, std::stod(std::string(s_.substr(start, pos_ - start)))});
            return;
        }
        if (s_.substr(pos_, 5) == "sqrtR") {
            pos_ += 5;
            code.push_back({Op::PushSqrtR});
            return;
        }
        if (s_.substr(pos_, 2) == "rA") {
            pos_ += 2;
            code.push_back({Op::PushRA});
            return;
        }
        if (c == 'R') {
            ++pos_;
            code.push_back({Op::PushR});
            return;
        }
        if (c == 't') {
            ++pos_;
            code.push_back({Op::PushT});
            return;
        }
        fail("unexpected character");
    }
};

double run(const Code& code, const TableContext& ctx) {
    double stack[64];
    int sp = 0;
    for (const auto& in : code) {
        switch (in.op) {
            case Op::PushConst: stack[sp++] = in.value; break;
            case Op::PushR: stack[sp++] = ctx.R; break;
            case Op::PushT: stack[sp++] = ctx.t; break;
            case Op::PushRA: stack[sp++] = ctx.rA; break;
            case Op::PushSqrtR: stack[sp++] = std::sqrt(ctx.R); break;
            case Op::Add: --sp; stack[sp - 1] += stack[sp]; break;
            case Op::Sub: --sp; stack[sp - 1] -= stack[sp]; break;
            case Op::Mul: --sp; stack[sp - 1] *= stack[sp]; break;
            case Op::Neg: stack[sp - 1] = -stack[sp - 1]; break;
            case Op::Pow: {
                double b = stack[sp - 1], r = 1.0;
                for (int i = 0; i < in.expo; ++i) r *= b;
                stack[sp - 1] = r;
                break;
            }
        }
    }
    return stack[0];
}

class Tables {
  public:
    static Tables& instance() {
        static Tables t;
        return t;
    }

    void load_text(const std::string& text) {
        std::map<std::string, Code> fresh;
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto colon = line.find(':');
            if (colon == std::string::npos) continue;
            std::string name = line.substr(0, colon);
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            if (name.empty()) continue;
            try {
                fresh[name] = Parser(line.substr(colon + 1)).parse();
            } catch (const std::exception& e) {
                throw std::runtime_error("coefficient table line " + std::to_string(lineno) +
                                         ": " + e.what());
            }
        }
        std::lock_guard<std::mutex> lock(mu_);
        table_ = std::move(fresh);
    }

    double eval(std::string_view name, const TableContext& ctx) {
        ensure_loaded();
        std::lock_guard<std::mutex> lock(mu_);
        auto it = table_.find(std::string(name));
        if (it == table_.end())
            throw std::out_of_range("unknown coefficient '" + std::string(name) + "'");
        return run(it->second, ctx);
    }

    bool has(std::string_view name) {
        ensure_loaded();
        std::lock_guard<std::mutex> lock(mu_);
        return table_.count(std::string(name)) != 0;
    }

    std::vector<std::string> names() {
        ensure_loaded();
        std::lock_guard<std::mutex> lock(mu_);
        std::vector<std::string> out;
        out.reserve(table_.size());
        for (const auto& [k, v] : table_) out.push_back(k);
        return out;
    }

  private:
    void ensure_loaded() {
        std::call_once(once_, [this] { load_text(kEmbeddedTables); });
    }

    std::once_flag once_;
    std::mutex mu_;
    std::map<std::string, Code> table_;
};

}  // namespace

double eval(std::string_view name, const TableContext& ctx) {
    return Tables::instance().eval(name, ctx);
}

bool has(std::string_view name) { return Tables::instance().has(name); }

std::vector<std::string> names() { return Tables::instance().names(); }

void load_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient table file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Tables::instance().load_text(buf.str());
}

double eval_expression(std::string_view expr, const TableContext& ctx) {
    return run(Parser(expr).parse(), ctx);
}

}  // namespace semitoric::coeffs
