#include "faasforge/syntax/parser.hpp"

#include <optional>

#include "faasforge/syntax/lexer.hpp"
#include "faasforge/syntax/source.hpp"

namespace faasforge::syntax {

namespace {

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    SyntaxTree parse_module() {
        SyntaxTree tree;
        while (!at(TokenKind::EndOfFile)) {
            if (accept(TokenKind::Newline))
                continue;
            tree.root.body.push_back(parse_statement(/*top_level=*/true));
        }
        return tree;
    }

    ExprPtr parse_single_expression() {
        ExprPtr e = parse_expr();
        accept(TokenKind::Newline);
        expect(TokenKind::EndOfFile, "end of expression");
        return e;
    }

private:
    // -- token helpers ---------------------------------------------------

    const Token& peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }

    const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    bool at(TokenKind kind) const { return peek().kind == kind; }

    bool at_op(const char* text) const {
        return peek().kind == TokenKind::Operator && peek().text == text;
    }

    bool at_kw(const char* word) const {
        return peek().kind == TokenKind::Keyword && peek().text == word;
    }

    bool accept(TokenKind kind) {
        if (!at(kind))
            return false;
        advance();
        return true;
    }

    bool accept_op(const char* text) {
        if (!at_op(text))
            return false;
        advance();
        return true;
    }

    bool accept_kw(const char* word) {
        if (!at_kw(word))
            return false;
        advance();
        return true;
    }

    const Token& expect(TokenKind kind, const char* what) {
        if (!at(kind))
            throw ParseError(peek().span, std::string("expected ") + what);
        return advance();
    }

    void expect_op(const char* text) {
        if (!at_op(text))
            throw ParseError(peek().span, std::string("expected '") + text + "'");
        advance();
    }

    void expect_kw(const char* word) {
        if (!at_kw(word))
            throw ParseError(peek().span, std::string("expected '") + word + "'");
        advance();
    }

    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(peek().span, message);
    }

    // Consume the rest of the logical line and, if an indented block
    // follows, the whole block. Used for recognized-but-unsupported
    // statements so parsing can continue past them.
    StmtPtr unsupported_statement(SourceSpan span, std::string construct) {
        while (!at(TokenKind::Newline) && !at(TokenKind::EndOfFile))
            advance();
        accept(TokenKind::Newline);
        if (at(TokenKind::Indent)) {
            int depth = 0;
            do {
                if (at(TokenKind::Indent))
                    ++depth;
                else if (at(TokenKind::Dedent))
                    --depth;
                advance();
            } while (depth > 0 && !at(TokenKind::EndOfFile));
        }
        return make_stmt(UnsupportedStmt{std::move(construct)}, span);
    }

    // Consume a balanced bracketed region after its opener was eaten.
    void skip_bracketed(const char* closer) {
        int depth = 1;
        while (depth > 0 && !at(TokenKind::EndOfFile)) {
            if (at_op("(") || at_op("[") || at_op("{"))
                ++depth;
            else if (at_op(")") || at_op("]") || at_op("}")) {
                --depth;
                if (depth == 0 && !at_op(closer))
                    fail("mismatched brackets");
            }
            advance();
        }
    }

    ExprPtr unsupported_expr_in_brackets(SourceSpan span, std::string construct,
                                         const char* closer) {
        skip_bracketed(closer);
        return make_expr(UnsupportedExpr{std::move(construct)}, span);
    }

    // -- statements ------------------------------------------------------

    StmtPtr parse_statement(bool top_level) {
        const Token& t = peek();
        if (t.kind == TokenKind::Keyword) {
            const std::string& kw = t.text;
            if (kw == "def")
                return parse_def();
            if (kw == "class")
                return parse_class();
            if (kw == "if")
                return parse_if(top_level);
            if (kw == "while")
                return parse_while();
            if (kw == "for")
                return parse_for();
            if (kw == "return")
                return parse_return();
            if (kw == "global")
                return parse_global();
            if (kw == "pass") {
                SourceSpan span = advance().span;
                end_simple_statement();
                return make_stmt(Pass{}, span);
            }
            if (kw == "import")
                return parse_import();
            if (kw == "try" || kw == "with")
                return unsupported_statement(t.span, "exception handling");
            if (kw == "raise" || kw == "except" || kw == "finally")
                return unsupported_statement(t.span, "exception handling");
            if (kw == "from" || kw == "as")
                return unsupported_statement(t.span, "from-import");
            if (kw == "del")
                return unsupported_statement(t.span, "del statement");
            if (kw == "assert")
                return unsupported_statement(t.span, "assert statement");
            if (kw == "break")
                return unsupported_statement(t.span, "break statement");
            if (kw == "continue")
                return unsupported_statement(t.span, "continue statement");
            if (kw == "nonlocal")
                return unsupported_statement(t.span, "nonlocal declaration");
            if (kw == "yield")
                return unsupported_statement(t.span, "generator");
            if (kw == "lambda" || kw == "not" || kw == "True" || kw == "False" ||
                kw == "None") {
                return parse_expression_statement();
            }
            fail("unexpected keyword '" + kw + "'");
        }
        if (t.kind == TokenKind::Operator && t.text == "@")
            return unsupported_statement(t.span, "decorator");
        return parse_expression_statement();
    }

    void end_simple_statement() {
        if (!accept(TokenKind::Newline) && !at(TokenKind::EndOfFile))
            fail("expected end of statement");
    }

    std::vector<StmtPtr> parse_suite(bool top_level = false) {
        expect_op(":");
        std::vector<StmtPtr> body;
        if (accept(TokenKind::Newline)) {
            expect(TokenKind::Indent, "an indented block");
            while (!at(TokenKind::Dedent) && !at(TokenKind::EndOfFile)) {
                if (accept(TokenKind::Newline))
                    continue;
                body.push_back(parse_statement(top_level));
            }
            expect(TokenKind::Dedent, "end of block");
        } else {
            body.push_back(parse_statement(top_level)); // single-line suite
        }
        return body;
    }

    StmtPtr parse_def() {
        SourceSpan span = peek().span;
        expect_kw("def");
        std::string name = expect(TokenKind::Identifier, "a function name").text;
        expect_op("(");
        std::vector<std::string> params;
        std::optional<std::string> bad_construct;
        while (!at_op(")")) {
            if (at_op("*")) {
                bad_construct = "star parameter";
                advance();
                if (at_op("*"))
                    advance();
                continue;
            }
            std::string param = expect(TokenKind::Identifier, "a parameter name").text;
            if (accept_op("=")) {
                bad_construct = "default parameter";
                parse_expr();
            }
            params.push_back(std::move(param));
            if (!accept_op(","))
                break;
        }
        expect_op(")");
        std::vector<StmtPtr> body = parse_suite();
        if (bad_construct)
            return make_stmt(UnsupportedStmt{*bad_construct}, span);
        return make_stmt(FunctionDef{std::move(name), std::move(params), std::move(body)},
                         span);
    }

    StmtPtr parse_class() {
        SourceSpan span = peek().span;
        expect_kw("class");
        std::string name = expect(TokenKind::Identifier, "a class name").text;
        bool inherits = false;
        if (accept_op("(")) {
            inherits = true;
            skip_bracketed(")");
        }
        std::vector<StmtPtr> suite = parse_suite();
        if (inherits)
            return make_stmt(UnsupportedStmt{"class inheritance"}, span);
        std::vector<StmtPtr> methods;
        for (StmtPtr& s : suite) {
            if (std::holds_alternative<Pass>(s->node))
                continue;
            if (!std::holds_alternative<FunctionDef>(s->node) &&
                !std::holds_alternative<UnsupportedStmt>(s->node)) {
                methods.push_back(
                    make_stmt(UnsupportedStmt{"class-level statement"}, s->span));
                continue;
            }
            methods.push_back(std::move(s));
        }
        return make_stmt(ClassDef{std::move(name), std::move(methods)}, span);
    }

    bool is_main_guard_condition(const Expr& cond) const {
        const auto* cmp = std::get_if<Compare>(&cond.node);
        if (!cmp || cmp->rest.size() != 1 || cmp->rest[0].op != CompareOperator::Eq)
            return false;
        const auto* lhs = std::get_if<Name>(&cmp->first->node);
        const auto* rhs = std::get_if<StrLit>(&cmp->rest[0].operand->node);
        return lhs && rhs && lhs->id == "__name__" && rhs->value == "__main__";
    }

    StmtPtr parse_if(bool top_level) {
        SourceSpan span = peek().span;
        expect_kw("if");
        If node;
        IfBranch first;
        first.condition = parse_expr();
        first.body = parse_suite();
        bool guard_shape = top_level && is_main_guard_condition(*first.condition);
        node.branches.push_back(std::move(first));
        while (at_kw("elif")) {
            advance();
            IfBranch br;
            br.condition = parse_expr();
            br.body = parse_suite();
            node.branches.push_back(std::move(br));
            guard_shape = false;
        }
        if (accept_kw("else")) {
            node.orelse = parse_suite();
            guard_shape = false;
        }
        if (guard_shape)
            return make_stmt(MainGuard{std::move(node.branches[0].body)}, span);
        return make_stmt(std::move(node), span);
    }

    StmtPtr parse_while() {
        SourceSpan span = peek().span;
        expect_kw("while");
        While node;
        node.condition = parse_expr();
        node.body = parse_suite();
        return make_stmt(std::move(node), span);
    }

    StmtPtr parse_for() {
        SourceSpan span = peek().span;
        expect_kw("for");
        std::string var = expect(TokenKind::Identifier, "a loop variable").text;
        expect_kw("in");
        ExprPtr iterable = parse_expr();
        std::vector<StmtPtr> body = parse_suite();
        auto* call = std::get_if<Call>(&iterable->node);
        const Name* callee = call ? std::get_if<Name>(&call->callee->node) : nullptr;
        if (!callee || callee->id != "range" || call->args.empty() ||
            call->args.size() > 3)
            return make_stmt(UnsupportedStmt{"for over arbitrary iterable"}, span);
        return make_stmt(
            ForRange{std::move(var), std::move(call->args), std::move(body)}, span);
    }

    StmtPtr parse_return() {
        SourceSpan span = peek().span;
        expect_kw("return");
        Return node;
        if (!at(TokenKind::Newline) && !at(TokenKind::EndOfFile) &&
            !at(TokenKind::Dedent))
            node.value = parse_expr();
        end_simple_statement();
        return make_stmt(std::move(node), span);
    }

    StmtPtr parse_global() {
        SourceSpan span = peek().span;
        expect_kw("global");
        GlobalDecl node;
        node.names.push_back(expect(TokenKind::Identifier, "a global name").text);
        while (accept_op(","))
            node.names.push_back(expect(TokenKind::Identifier, "a global name").text);
        end_simple_statement();
        return make_stmt(std::move(node), span);
    }

    StmtPtr parse_import() {
        SourceSpan span = peek().span;
        expect_kw("import");
        std::string module = expect(TokenKind::Identifier, "a module name").text;
        if (at_op("."))
            return unsupported_statement(span, "dotted import");
        if (at_kw("as"))
            return unsupported_statement(span, "import alias");
        if (at_op(","))
            return unsupported_statement(span, "multiple import");
        end_simple_statement();
        return make_stmt(Import{std::move(module)}, span);
    }

    StmtPtr parse_expression_statement() {
        SourceSpan span = peek().span;
        ExprPtr first = parse_expr();
        if (at_op(","))
            return unsupported_statement(span, "unpacking assignment");
        if (accept_op("=")) {
            ExprPtr value = parse_expr();
            if (at_op("="))
                return unsupported_statement(span, "chained assignment");
            end_simple_statement();
            if (std::holds_alternative<TupleLit>(first->node) ||
                std::holds_alternative<ListLit>(first->node))
                return make_stmt(UnsupportedStmt{"unpacking assignment"}, span);
            require_assignable(*first);
            return make_stmt(Assign{std::move(first), std::move(value)}, span);
        }
        if (auto op = peek_augmented_op()) {
            advance();
            ExprPtr value = parse_expr();
            end_simple_statement();
            require_assignable(*first);
            return make_stmt(AugAssign{std::move(first), *op, std::move(value)}, span);
        }
        end_simple_statement();
        return make_stmt(ExprStmt{std::move(first)}, span);
    }

    void require_assignable(const Expr& target) {
        if (!std::holds_alternative<Name>(target.node) &&
            !std::holds_alternative<Attribute>(target.node) &&
            !std::holds_alternative<Subscript>(target.node) &&
            !std::holds_alternative<UnsupportedExpr>(target.node))
            throw ParseError(target.span, "cannot assign to this expression");
    }

    std::optional<BinaryOperator> peek_augmented_op() const {
        if (peek().kind != TokenKind::Operator)
            return std::nullopt;
        const std::string& t = peek().text;
        if (t == "+=") return BinaryOperator::Add;
        if (t == "-=") return BinaryOperator::Sub;
        if (t == "*=") return BinaryOperator::Mul;
        if (t == "/=") return BinaryOperator::Div;
        if (t == "//=") return BinaryOperator::FloorDiv;
        if (t == "%=") return BinaryOperator::Mod;
        if (t == "**=") return BinaryOperator::Pow;
        return std::nullopt;
    }

    // -- expressions -------------------------------------------------------

    ExprPtr parse_expr() {
        ExprPtr e = parse_or();
        if (at_kw("if")) { // conditional expression: a if c else b
            SourceSpan span = advance().span;
            parse_or();
            expect_kw("else");
            parse_expr();
            return make_expr(UnsupportedExpr{"conditional expression"}, span);
        }
        return e;
    }

    ExprPtr parse_or() {
        ExprPtr first = parse_and();
        if (!at_kw("or"))
            return first;
        BoolOp node{BoolOperator::Or, {}};
        SourceSpan span = first->span;
        node.operands.push_back(std::move(first));
        while (accept_kw("or"))
            node.operands.push_back(parse_and());
        return make_expr(std::move(node), span);
    }

    ExprPtr parse_and() {
        ExprPtr first = parse_not();
        if (!at_kw("and"))
            return first;
        BoolOp node{BoolOperator::And, {}};
        SourceSpan span = first->span;
        node.operands.push_back(std::move(first));
        while (accept_kw("and"))
            node.operands.push_back(parse_not());
        return make_expr(std::move(node), span);
    }

    ExprPtr parse_not() {
        if (at_kw("not")) {
            SourceSpan span = advance().span;
            return make_expr(UnaryOp{UnaryOperator::Not, parse_not()}, span);
        }
        return parse_comparison();
    }

    std::optional<CompareOperator> peek_compare_op() const {
        if (at_kw("in"))
            return CompareOperator::In;
        if (peek().kind != TokenKind::Operator)
            return std::nullopt;
        const std::string& t = peek().text;
        if (t == "==") return CompareOperator::Eq;
        if (t == "!=") return CompareOperator::Ne;
        if (t == "<") return CompareOperator::Lt;
        if (t == "<=") return CompareOperator::Le;
        if (t == ">") return CompareOperator::Gt;
        if (t == ">=") return CompareOperator::Ge;
        return std::nullopt;
    }

    ExprPtr parse_comparison() {
        ExprPtr first = parse_arith();
        if (at_kw("is")) {
            SourceSpan span = advance().span;
            accept_kw("not");
            parse_arith();
            return make_expr(UnsupportedExpr{"identity comparison"}, span);
        }
        if (at_kw("not") && peek(1).kind == TokenKind::Keyword && peek(1).text == "in") {
            SourceSpan span = advance().span;
            advance();
            parse_arith();
            return make_expr(UnsupportedExpr{"not-in comparison"}, span);
        }
        if (!peek_compare_op())
            return first;
        Compare node;
        SourceSpan span = first->span;
        node.first = std::move(first);
        while (auto op = peek_compare_op()) {
            advance();
            node.rest.push_back(CompareStep{*op, parse_arith()});
        }
        return make_expr(std::move(node), span);
    }

    ExprPtr parse_arith() {
        ExprPtr lhs = parse_term();
        while (at_op("+") || at_op("-")) {
            BinaryOperator op =
                peek().text == "+" ? BinaryOperator::Add : BinaryOperator::Sub;
            SourceSpan span = lhs->span;
            advance();
            lhs = make_expr(BinOp{std::move(lhs), op, parse_term()}, span);
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (at_op("*") || at_op("/") || at_op("//") || at_op("%")) {
            BinaryOperator op = BinaryOperator::Mul;
            if (peek().text == "/")
                op = BinaryOperator::Div;
            else if (peek().text == "//")
                op = BinaryOperator::FloorDiv;
            else if (peek().text == "%")
                op = BinaryOperator::Mod;
            SourceSpan span = lhs->span;
            advance();
            lhs = make_expr(BinOp{std::move(lhs), op, parse_factor()}, span);
        }
        return lhs;
    }

    ExprPtr parse_factor() {
        if (at_op("-")) {
            SourceSpan span = advance().span;
            return make_expr(UnaryOp{UnaryOperator::Neg, parse_factor()}, span);
        }
        if (at_op("+")) {
            SourceSpan span = advance().span;
            parse_factor();
            return make_expr(UnsupportedExpr{"unary plus"}, span);
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_postfix();
        if (at_op("**")) {
            SourceSpan span = base->span;
            advance();
            // right-associative; the exponent may itself be signed
            return make_expr(
                BinOp{std::move(base), BinaryOperator::Pow, parse_factor()}, span);
        }
        return base;
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_atom();
        while (true) {
            if (at_op("(")) {
                SourceSpan span = e->span;
                advance();
                Call call;
                call.callee = std::move(e);
                if (!parse_call_args(call.args))
                    expect_op(")");
                e = make_expr(std::move(call), span);
                continue;
            }
            if (at_op(".")) {
                SourceSpan span = e->span;
                advance();
                std::string attr = expect(TokenKind::Identifier, "an attribute name").text;
                e = make_expr(Attribute{std::move(e), std::move(attr)}, span);
                continue;
            }
            if (at_op("[")) {
                SourceSpan span = e->span;
                SourceSpan bracket = advance().span;
                if (at_op(":")) {
                    e = unsupported_expr_in_brackets(bracket, "slice", "]");
                    continue;
                }
                ExprPtr index = parse_expr();
                if (at_op(":")) {
                    e = unsupported_expr_in_brackets(bracket, "slice", "]");
                    continue;
                }
                expect_op("]");
                e = make_expr(Subscript{std::move(e), std::move(index)}, span);
                continue;
            }
            break;
        }
        return e;
    }

    // Returns true when the closing ')' was already consumed (skipping a
    // generator-expression argument eats through it).
    bool parse_call_args(std::vector<ExprPtr>& args) {
        while (!at_op(")")) {
            if (at_op("*")) {
                SourceSpan span = advance().span;
                if (at_op("*"))
                    advance();
                parse_expr();
                args.push_back(make_expr(UnsupportedExpr{"star argument"}, span));
            } else if (peek().kind == TokenKind::Identifier && peek(1).kind == TokenKind::Operator &&
                       peek(1).text == "=") {
                SourceSpan span = peek().span;
                advance();
                advance();
                parse_expr();
                args.push_back(make_expr(UnsupportedExpr{"keyword argument"}, span));
            } else {
                ExprPtr arg = parse_expr();
                if (at_kw("for")) {
                    args.push_back(unsupported_expr_in_brackets(arg->span,
                                                                "comprehension", ")"));
                    return true;
                }
                args.push_back(std::move(arg));
            }
            if (!accept_op(","))
                break;
        }
        return false;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
        case TokenKind::IntLiteral: {
            advance();
            return make_expr(IntLit{t.int_value}, t.span);
        }
        case TokenKind::FloatLiteral: {
            advance();
            return make_expr(FloatLit{t.float_value}, t.span);
        }
        case TokenKind::StringLiteral: {
            advance();
            return make_expr(StrLit{t.text}, t.span);
        }
        case TokenKind::Identifier: {
            advance();
            return make_expr(Name{t.text}, t.span);
        }
        case TokenKind::Keyword: {
            if (t.text == "True" || t.text == "False") {
                advance();
                return make_expr(BoolLit{t.text == "True"}, t.span);
            }
            if (t.text == "None") {
                advance();
                return make_expr(NoneLit{}, t.span);
            }
            if (t.text == "lambda") {
                SourceSpan span = advance().span;
                while (!at_op(":") && !at(TokenKind::Newline) &&
                       !at(TokenKind::EndOfFile))
                    advance();
                if (accept_op(":"))
                    parse_expr();
                return make_expr(UnsupportedExpr{"anonymous function"}, span);
            }
            if (t.text == "yield") {
                SourceSpan span = advance().span;
                if (!at(TokenKind::Newline) && !at_op(")"))
                    parse_expr();
                return make_expr(UnsupportedExpr{"generator"}, span);
            }
            fail("unexpected keyword '" + t.text + "' in expression");
        }
        case TokenKind::Operator: {
            if (t.text == "(")
                return parse_paren();
            if (t.text == "[")
                return parse_list();
            if (t.text == "{")
                return parse_map();
            fail("unexpected token '" + t.text + "'");
        }
        default:
            fail("unexpected token in expression");
        }
    }

    ExprPtr parse_paren() {
        SourceSpan span = peek().span;
        expect_op("(");
        if (accept_op(")"))
            return make_expr(TupleLit{}, span);
        ExprPtr first = parse_expr();
        if (at_kw("for"))
            return unsupported_expr_in_brackets(span, "comprehension", ")");
        if (accept_op(")"))
            return first; // plain grouping
        TupleLit tuple;
        tuple.items.push_back(std::move(first));
        while (accept_op(",")) {
            if (at_op(")"))
                break; // trailing comma
            tuple.items.push_back(parse_expr());
        }
        expect_op(")");
        return make_expr(std::move(tuple), span);
    }

    ExprPtr parse_list() {
        SourceSpan span = peek().span;
        expect_op("[");
        ListLit list;
        if (accept_op("]"))
            return make_expr(std::move(list), span);
        list.items.push_back(parse_expr());
        if (at_kw("for"))
            return unsupported_expr_in_brackets(span, "comprehension", "]");
        while (accept_op(",")) {
            if (at_op("]"))
                break;
            list.items.push_back(parse_expr());
        }
        expect_op("]");
        return make_expr(std::move(list), span);
    }

    ExprPtr parse_map() {
        SourceSpan span = peek().span;
        expect_op("{");
        MapLit map;
        if (accept_op("}"))
            return make_expr(std::move(map), span);
        while (true) {
            if (peek().kind != TokenKind::StringLiteral) {
                ExprPtr key = parse_expr();
                if (at_op(":"))
                    return unsupported_expr_in_brackets(span, "non-string map key", "}");
                if (at_kw("for"))
                    return unsupported_expr_in_brackets(span, "comprehension", "}");
                return unsupported_expr_in_brackets(span, "set literal", "}");
            }
            std::string key = advance().text;
            expect_op(":");
            ExprPtr value = parse_expr();
            if (at_kw("for"))
                return unsupported_expr_in_brackets(span, "comprehension", "}");
            map.entries.push_back(MapEntry{std::move(key), std::move(value)});
            if (!accept_op(","))
                break;
            if (at_op("}"))
                break;
        }
        expect_op("}");
        return make_expr(std::move(map), span);
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

} // namespace

SyntaxTree parse(const std::string& text) {
    return Parser(tokenize(text)).parse_module();
}

ExprPtr parse_expression(const std::string& text) {
    return Parser(tokenize(text)).parse_single_expression();
}

} // namespace faasforge::syntax
