// Copyright 2026 The qutil Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qutil/arlkit/scaling_expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>

#include "qutil/error.hpp"

namespace qutil::arl {

const std::map<std::string, std::string>& scaling_legend() {
    static const std::map<std::string, std::string> legend = {
        {"N", "number of qubits"},
        {"eps", "precision"},
        {"n", "number of visible layers"},
        {"m", "number of hidden layers"},
        {"n_p", "number of particles"},
        {"t", "number of Trotter time steps"},
        {"p", "number of terms in Hamiltonian"},
        {"q", "number of ansatz parameters"},
        {"|T|", "cardinality of training set"},
        {"L", "number of re-uploading layers"},
        {"E", "number of graph edges"},
        {"n_out", "number of output layer nodes"},
        {"r", "reduction rate of pooling layers"},
        {"V", "number of graph vertices"},
        {"n_v", "number of sampling vectors"},
    };
    return legend;
}

struct ScalingExpr::Node {
    enum class Op { Num, Var, Add, Sub, Mul, Div, Neg, Pow, Binom, Log, Ceil, BigO };
    Op op = Op::Num;
    double value = 0.0;
    std::string name;
    std::shared_ptr<const Node> base;  // Log only; null means natural log
    std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using Node = ScalingExpr::Node;
using NodePtr = std::shared_ptr<const Node>;
using Op = Node::Op;

NodePtr make(Op op, std::vector<NodePtr> args = {}) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->args = std::move(args);
    return n;
}

class Parser {
  public:
    explicit Parser(std::string_view s) : s_(s) {}

    NodePtr parse() {
        NodePtr root;
        skip();
        if (peek_word("O")) {
            pos_ += 1;
            expect('(');
            root = make(Op::BigO, {sum()});
            expect(')');
        } else {
            root = sum();
        }
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return root;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidInput("scaling expression '" + std::string(s_) + "': " + what + " at offset " +
                           std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        if (!at(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool peek_word(std::string_view w) const { return s_.substr(pos_, w.size()) == w; }

    // Keywords, then legend symbols longest first, so "n_out" wins over "n".
    std::optional<std::string> peek_identifier() {
        skip();
        static const std::vector<std::string> words = [] {
            std::vector<std::string> v = {"binom", "ceil", "log", "ε"};
            for (const auto& [sym, _] : scaling_legend()) v.push_back(sym);
            std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
            return v;
        }();
        for (const auto& w : words) {
            if (peek_word(w)) return w;
        }
        return std::nullopt;
    }

    bool starts_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '{' || c == '.') return true;
        return peek_identifier().has_value();
    }

    NodePtr sum() {
        NodePtr lhs = product();
        while (at('+') || at('-')) {
            const Op op = s_[pos_] == '+' ? Op::Add : Op::Sub;
            ++pos_;
            lhs = make(op, {lhs, product()});
        }
        return lhs;
    }

    NodePtr product() {
        NodePtr lhs = unary();
        for (;;) {
            if (at('*') || at('/')) {
                const Op op = s_[pos_] == '*' ? Op::Mul : Op::Div;
                ++pos_;
                lhs = make(op, {lhs, unary()});
            } else if (starts_atom()) {
                lhs = make(Op::Mul, {lhs, power()});
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary() {
        if (at('-')) {
            ++pos_;
            return make(Op::Neg, {unary()});
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (at('^')) {
            ++pos_;
            return make(Op::Pow, {base, power_operand()});
        }
        return base;
    }

    // Exponents bind tightly: "2^n_out" or "2^{n+1}" but "2^N N" is 2^N * N.
    NodePtr power_operand() {
        if (at('-')) {
            ++pos_;
            return make(Op::Neg, {power_operand()});
        }
        return power();
    }

    NodePtr atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(' || c == '{') {
            ++pos_;
            NodePtr inner = sum();
            expect(c == '(' ? ')' : '}');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t end = pos_;
            while (end < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[end])) || s_[end] == '.')) ++end;
            auto n = std::make_shared<Node>();
            n->op = Op::Num;
            try {
                n->value = std::stod(std::string(s_.substr(pos_, end - pos_)));
            } catch (const std::exception&) {
                fail("bad number");
            }
            pos_ = end;
            return n;
        }
        const auto id = peek_identifier();
        if (!id) fail("unknown symbol");
        pos_ += id->size();
        if (*id == "binom") {
            expect('(');
            NodePtr a = sum();
            expect(',');
            NodePtr b = sum();
            expect(')');
            return make(Op::Binom, {a, b});
        }
        if (*id == "ceil") {
            expect('(');
            NodePtr a = sum();
            expect(')');
            return make(Op::Ceil, {a});
        }
        if (*id == "log") {
            NodePtr base;
            if (at('_')) {
                ++pos_;
                base = atom();
            }
            auto n = std::make_shared<Node>();
            n->op = Op::Log;
            n->base = base;
            n->args = {power()};
            return n;
        }
        auto n = std::make_shared<Node>();
        n->op = Op::Var;
        n->name = *id == "ε" ? "eps" : *id;
        return n;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

void collect(const Node& n, std::set<std::string>& out) {
    if (n.op == Op::Var) out.insert(n.name);
    if (n.base) collect(*n.base, out);
    for (const auto& a : n.args) collect(*a, out);
}

bool independent(const Growth& g) { return g == Growth::constant(); }

bool has_variables(const Node& n) {
    std::set<std::string> vars;
    collect(n, vars);
    return !vars.empty();
}

double eval(const Node& n, const std::map<std::string, double>& values);

/// Integer value of a variable-free subexpression, if it is one.
std::optional<int> constant_integer(const Node& n) {
    if (has_variables(n)) return std::nullopt;
    const double v = eval(n, {});
    if (v < 0 || std::abs(v - std::round(v)) > 1e-12) return std::nullopt;
    return static_cast<int>(std::round(v));
}

Growth growth(const Node& n, const std::string& v) {
    switch (n.op) {
        case Op::Num: return Growth::constant();
        case Op::Var: return n.name == v ? Growth::polynomial(1) : Growth::constant();
        case Op::Neg:
        case Op::Ceil:
        case Op::BigO: return growth(*n.args[0], v);
        case Op::Add:
        case Op::Sub: {
            const Growth a = growth(*n.args[0], v), b = growth(*n.args[1], v);
            return a.rank() >= b.rank() ? a : b;
        }
        case Op::Mul: {
            const Growth a = growth(*n.args[0], v), b = growth(*n.args[1], v);
            if (a.kind == Growth::Kind::Unresolved || b.kind == Growth::Kind::Unresolved) return Growth::unresolved();
            if (a.kind == Growth::Kind::Exponential || b.kind == Growth::Kind::Exponential) return Growth::exponential();
            return Growth::polynomial(a.degree + b.degree);
        }
        case Op::Div: {
            const Growth a = growth(*n.args[0], v), b = growth(*n.args[1], v);
            if (independent(b)) return a;
            if (a.kind == Growth::Kind::Polynomial && b.kind == Growth::Kind::Polynomial) {
                return Growth::polynomial(std::max(0, a.degree - b.degree));
            }
            return Growth::unresolved();
        }
        case Op::Pow: {
            const Growth base = growth(*n.args[0], v), exp = growth(*n.args[1], v);
            if (!independent(exp)) return independent(base) ? Growth::exponential() : Growth::unresolved();
            if (independent(base)) return Growth::constant();
            if (base.kind == Growth::Kind::Exponential) return base;
            const auto k = constant_integer(*n.args[1]);
            if (k && base.kind == Growth::Kind::Polynomial) return Growth::polynomial(base.degree * *k);
            return Growth::unresolved();
        }
        case Op::Binom: {
            const Growth top = growth(*n.args[0], v), k = growth(*n.args[1], v);
            if (!independent(k)) return Growth::unresolved();
            if (independent(top)) return Growth::constant();
            const auto kk = constant_integer(*n.args[1]);
            if (kk && top.kind == Growth::Kind::Polynomial) return Growth::polynomial(top.degree * *kk);
            return Growth::unresolved();
        }
        case Op::Log: {
            const Growth arg = growth(*n.args[0], v);
            if (n.base && !independent(growth(*n.base, v))) return Growth::unresolved();
            return arg.kind == Growth::Kind::Polynomial ? Growth::constant() : Growth::unresolved();
        }
    }
    return Growth::unresolved();
}

double eval(const Node& n, const std::map<std::string, double>& values) {
    auto arg = [&](std::size_t i) { return eval(*n.args[i], values); };
    switch (n.op) {
        case Op::Num: return n.value;
        case Op::Var: {
            const auto it = values.find(n.name);
            if (it == values.end()) throw InvalidInput("no value bound for '" + n.name + "'");
            return it->second;
        }
        case Op::Add: return arg(0) + arg(1);
        case Op::Sub: return arg(0) - arg(1);
        case Op::Mul: return arg(0) * arg(1);
        case Op::Div: return arg(0) / arg(1);
        case Op::Neg: return -arg(0);
        case Op::Pow: return std::pow(arg(0), arg(1));
        case Op::Ceil: return std::ceil(arg(0) - 1e-12);
        case Op::BigO: return arg(0);
        case Op::Binom: {
            const double a = arg(0), b = arg(1);
            if (b < 0 || b > a) return 0.0;
            return std::round(std::exp(std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1)) * 1e9) / 1e9;
        }
        case Op::Log: {
            const double x = arg(0);
            return n.base ? std::log(x) / std::log(eval(*n.base, values)) : std::log(x);
        }
    }
    return 0.0;
}

}  // namespace

ScalingExpr ScalingExpr::parse(std::string_view text) {
    ScalingExpr e;
    e.text_ = std::string(text);
    e.root_ = Parser(text).parse();
    return e;
}

std::set<std::string> ScalingExpr::variables() const {
    std::set<std::string> out;
    if (root_) collect(*root_, out);
    return out;
}

Growth ScalingExpr::growth_in(const std::string& variable) const {
    if (!scaling_legend().contains(variable)) throw InvalidInput("'" + variable + "' is not a legend symbol");
    return root_ ? growth(*root_, variable) : Growth::constant();
}

double ScalingExpr::evaluate(const std::map<std::string, double>& values) const {
    if (!root_) throw InvalidInput("empty scaling expression");
    return eval(*root_, values);
}

}  // namespace qutil::arl
