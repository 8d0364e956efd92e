#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "faasforge/syntax/span.hpp"

namespace faasforge::syntax {

using BigInt = boost::multiprecision::cpp_int;

enum class BinaryOperator { Add, Sub, Mul, Div, FloorDiv, Mod, Pow };
enum class UnaryOperator { Neg, Not };
enum class CompareOperator { Eq, Ne, Lt, Le, Gt, Ge, In };
enum class BoolOperator { And, Or };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;
struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

// -- Expressions --------------------------------------------------------

struct IntLit { BigInt value; };
struct FloatLit { double value = 0.0; };
struct StrLit { std::string value; };
struct BoolLit { bool value = false; };
struct NoneLit {};
struct ListLit { std::vector<ExprPtr> items; };
struct TupleLit { std::vector<ExprPtr> items; };

struct MapEntry {
    std::string key; // the subset allows string keys only
    ExprPtr value;
};
struct MapLit { std::vector<MapEntry> entries; };

struct Name { std::string id; };
struct Attribute { ExprPtr object; std::string attr; };
struct Subscript { ExprPtr object; ExprPtr index; };
struct Call { ExprPtr callee; std::vector<ExprPtr> args; };
struct BinOp { ExprPtr lhs; BinaryOperator op = BinaryOperator::Add; ExprPtr rhs; };
struct UnaryOp { UnaryOperator op = UnaryOperator::Neg; ExprPtr operand; };

struct CompareStep { CompareOperator op = CompareOperator::Eq; ExprPtr operand; };
struct Compare { ExprPtr first; std::vector<CompareStep> rest; };

struct BoolOp { BoolOperator op = BoolOperator::And; std::vector<ExprPtr> operands; };

/// A construct the parser recognized but the subset excludes
/// (e.g. an anonymous inline function). check_subset turns these
/// into SubsetViolations; they never survive into transformation.
struct UnsupportedExpr { std::string construct; };

using ExprNode = std::variant<IntLit, FloatLit, StrLit, BoolLit, NoneLit, ListLit,
                              TupleLit, MapLit, Name, Attribute, Subscript, Call,
                              BinOp, UnaryOp, Compare, BoolOp, UnsupportedExpr>;

struct Expr {
    SourceSpan span;
    ExprNode node;
};

// -- Statements ---------------------------------------------------------

struct Import { std::string module; };

struct FunctionDef {
    std::string name;
    std::vector<std::string> params;
    std::vector<StmtPtr> body;
};

struct ClassDef {
    std::string name;
    std::vector<StmtPtr> methods; // FunctionDef statements only
};

struct Assign { ExprPtr target; ExprPtr value; };
struct AugAssign { ExprPtr target; BinaryOperator op = BinaryOperator::Add; ExprPtr value; };
struct Return { ExprPtr value; }; // value may be null (bare `return`)

struct IfBranch { ExprPtr condition; std::vector<StmtPtr> body; };
struct If {
    std::vector<IfBranch> branches; // if + elif chain
    std::vector<StmtPtr> orelse;
};

struct While { ExprPtr condition; std::vector<StmtPtr> body; };

struct ForRange {
    std::string var;
    std::vector<ExprPtr> bounds; // 1..3 range() arguments
    std::vector<StmtPtr> body;
};

struct GlobalDecl { std::vector<std::string> names; };
struct ExprStmt { ExprPtr expr; };

/// The sole representation of `if __name__ == "__main__":` at module level.
struct MainGuard { std::vector<StmtPtr> body; };

struct Pass {};
struct UnsupportedStmt { std::string construct; };

using StmtNode = std::variant<Import, FunctionDef, ClassDef, Assign, AugAssign, Return,
                              If, While, ForRange, GlobalDecl, ExprStmt, MainGuard,
                              Pass, UnsupportedStmt>;

struct Stmt {
    SourceSpan span;
    StmtNode node;
};

struct ModuleNode { std::vector<StmtPtr> body; };

struct SyntaxTree { ModuleNode root; };

// -- Tree utilities -----------------------------------------------------

ExprPtr clone(const Expr& e);
StmtPtr clone(const Stmt& s);
std::vector<StmtPtr> clone(const std::vector<StmtPtr>& body);
SyntaxTree clone(const SyntaxTree& tree);
FunctionDef clone(const FunctionDef& fn);

/// Structural equality; spans are ignored.
bool equal(const Expr& a, const Expr& b);
bool equal(const Stmt& a, const Stmt& b);
bool equal(const SyntaxTree& a, const SyntaxTree& b);

/// Convenience constructors used by tests and generated-code builders.
ExprPtr make_expr(ExprNode node, SourceSpan span = {});
StmtPtr make_stmt(StmtNode node, SourceSpan span = {});

} // namespace faasforge::syntax
