#include "faasforge/syntax/emitter.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace faasforge::syntax {

namespace {

template <class... Ts> struct Overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

// Precedence levels used to decide where parentheses are required.
enum Level {
    kOr = 1,
    kAnd = 2,
    kNot = 3,
    kCompare = 4,
    kAdd = 5,
    kMul = 6,
    kUnary = 7,
    kPow = 8,
    kPostfix = 9,
    kAtom = 10,
};

int level_of(const Expr& e) {
    return std::visit(
        Overloaded{
            [](const BoolOp& n) { return n.op == BoolOperator::Or ? kOr : kAnd; },
            [](const UnaryOp& n) { return n.op == UnaryOperator::Not ? kNot : kUnary; },
            [](const Compare&) { return kCompare; },
            [](const BinOp& n) {
                switch (n.op) {
                case BinaryOperator::Add:
                case BinaryOperator::Sub:
                    return kAdd;
                case BinaryOperator::Pow:
                    return kPow;
                default:
                    return kMul;
                }
            },
            [](const Attribute&) { return kPostfix; },
            [](const Subscript&) { return kPostfix; },
            [](const Call&) { return kPostfix; },
            [](const auto&) { return kAtom; },
        },
        e.node);
}

const char* binary_lexeme(BinaryOperator op) {
    switch (op) {
    case BinaryOperator::Add: return "+";
    case BinaryOperator::Sub: return "-";
    case BinaryOperator::Mul: return "*";
    case BinaryOperator::Div: return "/";
    case BinaryOperator::FloorDiv: return "//";
    case BinaryOperator::Mod: return "%";
    case BinaryOperator::Pow: return "**";
    }
    return "?";
}

const char* compare_lexeme(CompareOperator op) {
    switch (op) {
    case CompareOperator::Eq: return "==";
    case CompareOperator::Ne: return "!=";
    case CompareOperator::Lt: return "<";
    case CompareOperator::Le: return "<=";
    case CompareOperator::Gt: return ">";
    case CompareOperator::Ge: return ">=";
    case CompareOperator::In: return "in";
    }
    return "?";
}

std::string escape_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        case '\\': out += "\\\\"; break;
        case '"': out += "\\\""; break;
        default: out += c;
        }
    }
    out += '"';
    return out;
}

class Emitter {
public:
    std::string emit_module(const SyntaxTree& tree) {
        bool first = true;
        for (const StmtPtr& s : tree.root.body) {
            bool wants_gap = std::holds_alternative<FunctionDef>(s->node) ||
                             std::holds_alternative<ClassDef>(s->node) ||
                             std::holds_alternative<MainGuard>(s->node);
            if (wants_gap && !first)
                out_ += '\n';
            statement(*s, 0);
            first = false;
        }
        return std::move(out_);
    }

    std::string emit_one(const Stmt& s, int indent) {
        statement(s, indent);
        return std::move(out_);
    }

    std::string emit_one(const Expr& e) {
        expression(e, 0);
        return std::move(out_);
    }

private:
    void line_start(int indent) { out_.append(static_cast<size_t>(indent) * 4, ' '); }

    void block(const std::vector<StmtPtr>& body, int indent) {
        if (body.empty()) {
            line_start(indent);
            out_ += "pass\n";
            return;
        }
        for (const StmtPtr& s : body)
            statement(*s, indent);
    }

    void statement(const Stmt& s, int indent) {
        std::visit(
            Overloaded{
                [&](const Import& n) {
                    line_start(indent);
                    out_ += "import " + n.module + "\n";
                },
                [&](const FunctionDef& n) {
                    line_start(indent);
                    out_ += "def " + n.name + "(";
                    for (size_t i = 0; i < n.params.size(); ++i) {
                        if (i)
                            out_ += ", ";
                        out_ += n.params[i];
                    }
                    out_ += "):\n";
                    block(n.body, indent + 1);
                },
                [&](const ClassDef& n) {
                    line_start(indent);
                    out_ += "class " + n.name + ":\n";
                    if (n.methods.empty()) {
                        line_start(indent + 1);
                        out_ += "pass\n";
                    }
                    for (size_t i = 0; i < n.methods.size(); ++i)
                        statement(*n.methods[i], indent + 1);
                },
                [&](const Assign& n) {
                    line_start(indent);
                    expression(*n.target, 0);
                    out_ += " = ";
                    expression(*n.value, 0);
                    out_ += '\n';
                },
                [&](const AugAssign& n) {
                    line_start(indent);
                    expression(*n.target, 0);
                    out_ += " ";
                    out_ += binary_lexeme(n.op);
                    out_ += "= ";
                    expression(*n.value, 0);
                    out_ += '\n';
                },
                [&](const Return& n) {
                    line_start(indent);
                    out_ += "return";
                    if (n.value) {
                        out_ += ' ';
                        expression(*n.value, 0);
                    }
                    out_ += '\n';
                },
                [&](const If& n) {
                    for (size_t i = 0; i < n.branches.size(); ++i) {
                        line_start(indent);
                        out_ += i == 0 ? "if " : "elif ";
                        expression(*n.branches[i].condition, 0);
                        out_ += ":\n";
                        block(n.branches[i].body, indent + 1);
                    }
                    if (!n.orelse.empty()) {
                        line_start(indent);
                        out_ += "else:\n";
                        block(n.orelse, indent + 1);
                    }
                },
                [&](const While& n) {
                    line_start(indent);
                    out_ += "while ";
                    expression(*n.condition, 0);
                    out_ += ":\n";
                    block(n.body, indent + 1);
                },
                [&](const ForRange& n) {
                    line_start(indent);
                    out_ += "for " + n.var + " in range(";
                    for (size_t i = 0; i < n.bounds.size(); ++i) {
                        if (i)
                            out_ += ", ";
                        expression(*n.bounds[i], 0);
                    }
                    out_ += "):\n";
                    block(n.body, indent + 1);
                },
                [&](const GlobalDecl& n) {
                    line_start(indent);
                    out_ += "global ";
                    for (size_t i = 0; i < n.names.size(); ++i) {
                        if (i)
                            out_ += ", ";
                        out_ += n.names[i];
                    }
                    out_ += '\n';
                },
                [&](const ExprStmt& n) {
                    line_start(indent);
                    expression(*n.expr, 0);
                    out_ += '\n';
                },
                [&](const MainGuard& n) {
                    line_start(indent);
                    out_ += "if __name__ == \"__main__\":\n";
                    block(n.body, indent + 1);
                },
                [&](const Pass&) {
                    line_start(indent);
                    out_ += "pass\n";
                },
                [&](const UnsupportedStmt& n) {
                    throw std::logic_error("cannot emit unsupported construct: " +
                                           n.construct);
                },
            },
            s.node);
    }

    // `minimum` is the lowest precedence allowed without parentheses.
    void expression(const Expr& e, int minimum) {
        int level = level_of(e);
        bool parens = level < minimum;
        if (parens)
            out_ += '(';
        std::visit(
            Overloaded{
                [&](const IntLit& n) { out_ += n.value.str(); },
                [&](const FloatLit& n) { out_ += format_float(n.value); },
                [&](const StrLit& n) { out_ += escape_string(n.value); },
                [&](const BoolLit& n) { out_ += n.value ? "True" : "False"; },
                [&](const NoneLit&) { out_ += "None"; },
                [&](const ListLit& n) {
                    out_ += '[';
                    for (size_t i = 0; i < n.items.size(); ++i) {
                        if (i)
                            out_ += ", ";
                        expression(*n.items[i], 0);
                    }
                    out_ += ']';
                },
                [&](const TupleLit& n) {
                    out_ += '(';
                    for (size_t i = 0; i < n.items.size(); ++i) {
                        if (i)
                            out_ += ", ";
                        expression(*n.items[i], 0);
                    }
                    if (n.items.size() == 1)
                        out_ += ',';
                    out_ += ')';
                },
                [&](const MapLit& n) {
                    out_ += '{';
                    for (size_t i = 0; i < n.entries.size(); ++i) {
                        if (i)
                            out_ += ", ";
                        out_ += escape_string(n.entries[i].key);
                        out_ += ": ";
                        expression(*n.entries[i].value, 0);
                    }
                    out_ += '}';
                },
                [&](const Name& n) { out_ += n.id; },
                [&](const Attribute& n) {
                    expression(*n.object, kPostfix);
                    out_ += '.' + n.attr;
                },
                [&](const Subscript& n) {
                    expression(*n.object, kPostfix);
                    out_ += '[';
                    expression(*n.index, 0);
                    out_ += ']';
                },
                [&](const Call& n) {
                    expression(*n.callee, kPostfix);
                    out_ += '(';
                    for (size_t i = 0; i < n.args.size(); ++i) {
                        if (i)
                            out_ += ", ";
                        expression(*n.args[i], 0);
                    }
                    out_ += ')';
                },
                [&](const BinOp& n) {
                    if (n.op == BinaryOperator::Pow) {
                        // right-associative; a literal exponent sign stays legal
                        expression(*n.lhs, kPow + 1);
                        out_ += " ** ";
                        expression(*n.rhs, kUnary);
                    } else {
                        expression(*n.lhs, level);
                        out_ += ' ';
                        out_ += binary_lexeme(n.op);
                        out_ += ' ';
                        expression(*n.rhs, level + 1);
                    }
                },
                [&](const UnaryOp& n) {
                    if (n.op == UnaryOperator::Not) {
                        out_ += "not ";
                        expression(*n.operand, kNot);
                    } else {
                        out_ += '-';
                        expression(*n.operand, kUnary);
                    }
                },
                [&](const Compare& n) {
                    expression(*n.first, kCompare + 1);
                    for (const CompareStep& step : n.rest) {
                        out_ += ' ';
                        out_ += compare_lexeme(step.op);
                        out_ += ' ';
                        expression(*step.operand, kCompare + 1);
                    }
                },
                [&](const BoolOp& n) {
                    const char* joiner = n.op == BoolOperator::Or ? " or " : " and ";
                    for (size_t i = 0; i < n.operands.size(); ++i) {
                        if (i)
                            out_ += joiner;
                        expression(*n.operands[i], level + 1);
                    }
                },
                [&](const UnsupportedExpr& n) {
                    throw std::logic_error("cannot emit unsupported construct: " +
                                           n.construct);
                },
            },
            e.node);
        if (parens)
            out_ += ')';
    }

    std::string out_;
};

} // namespace

std::string format_float(double value) {
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    std::string text(buf, end);
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
        text.find("inf") == std::string::npos && text.find("nan") == std::string::npos)
        text += ".0";
    return text;
}

std::string emit(const SyntaxTree& tree) {
    return Emitter().emit_module(tree);
}

std::string emit_statement(const Stmt& stmt, int indent) {
    return Emitter().emit_one(stmt, indent);
}

std::string emit_expression(const Expr& expr) {
    return Emitter().emit_one(expr);
}

} // namespace faasforge::syntax
