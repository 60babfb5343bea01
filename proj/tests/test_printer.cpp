#include "doctest.h"

#include "sbvr2ocl/ocl_printer.hpp"

using namespace sbvr2ocl;

TEST_CASE("primary expressions print bare") {
    CHECK(print_expr(o_self()) == "self");
    CHECK(print_expr(o_var("x")) == "x");
    CHECK(print_expr(o_int(42)) == "42");
    CHECK(print_expr(o_lit(Value::string("bob"))) == "'bob'");
    CHECK(print_expr(o_lit(Value::boolean(true))) == "true");
    CHECK(print_expr(o_lit(Value::boolean(false))) == "false");
    CHECK(print_expr(o_all_instances("Customer")) == "Customer.allInstances()");
}

TEST_CASE("navigation chains use dots; collection calls use arrows") {
    auto nav = o_attr(o_nav(o_self(), "account"), "balance");
    CHECK(print_expr(nav) == "self.account.balance");
    CHECK(print_expr(o_collop(o_nav(o_self(), "account"), CollOpKind::Size)) ==
          "self.account->size()");
    CHECK(print_expr(o_collop(o_nav(o_self(), "account"), CollOpKind::IsEmpty)) ==
          "self.account->isEmpty()");
    CHECK(print_expr(o_collop(o_nav(o_self(), "account"), CollOpKind::NotEmpty)) ==
          "self.account->notEmpty()");
}

TEST_CASE("iterator calls print the variable and body") {
    auto body = o_cmp(CmpKind::Ge, o_attr(o_var("a"), "balance"), o_int(0));
    CHECK(print_expr(o_iter(o_nav(o_self(), "account"), IterKind::ForAll, "a", body)) ==
          "self.account->forAll(a | a.balance >= 0)");
    CHECK(print_expr(o_iter(o_all_instances("Customer"), IterKind::Exists, "x",
                            o_attr(o_var("x"), "gold"))) ==
          "Customer.allInstances()->exists(x | x.gold)");
    CHECK(print_expr(o_collop(o_iter(o_all_instances("Customer"), IterKind::Select, "x",
                                     o_attr(o_var("x"), "gold")),
                              CollOpKind::Size)) ==
          "Customer.allInstances()->select(x | x.gold)->size()");
}

TEST_CASE("every comparison operator has its surface form") {
    auto l = o_attr(o_self(), "balance");
    CHECK(print_expr(o_cmp(CmpKind::Eq, l, o_int(1))) == "self.balance = 1");
    CHECK(print_expr(o_cmp(CmpKind::Ne, l, o_int(1))) == "self.balance <> 1");
    CHECK(print_expr(o_cmp(CmpKind::Lt, l, o_int(1))) == "self.balance < 1");
    CHECK(print_expr(o_cmp(CmpKind::Le, l, o_int(1))) == "self.balance <= 1");
    CHECK(print_expr(o_cmp(CmpKind::Gt, l, o_int(1))) == "self.balance > 1");
    CHECK(print_expr(o_cmp(CmpKind::Ge, l, o_int(1))) == "self.balance >= 1");
}

TEST_CASE("boolean connectives parenthesize only when precedence demands") {
    auto a = o_attr(o_self(), "a");
    auto b = o_attr(o_self(), "b");
    auto c = o_attr(o_self(), "c");

    // and binds tighter than or, which binds tighter than implies.
    CHECK(print_expr(o_bool(BoolKind::Or, o_bool(BoolKind::And, a, b), c)) ==
          "self.a and self.b or self.c");
    CHECK(print_expr(o_bool(BoolKind::And, o_bool(BoolKind::Or, a, b), c)) ==
          "(self.a or self.b) and self.c");
    CHECK(print_expr(o_bool(BoolKind::Implies, o_bool(BoolKind::Or, a, b), c)) ==
          "self.a or self.b implies self.c");
    CHECK(print_expr(o_bool(BoolKind::Or, o_bool(BoolKind::Implies, a, b), c)) ==
          "(self.a implies self.b) or self.c");

    // and/or associate left, implies right.
    CHECK(print_expr(o_bool(BoolKind::And, o_bool(BoolKind::And, a, b), c)) ==
          "self.a and self.b and self.c");
    CHECK(print_expr(o_bool(BoolKind::And, a, o_bool(BoolKind::And, b, c))) ==
          "self.a and (self.b and self.c)");
    CHECK(print_expr(o_bool(BoolKind::Implies, a, o_bool(BoolKind::Implies, b, c))) ==
          "self.a implies self.b implies self.c");
    CHECK(print_expr(o_bool(BoolKind::Implies, o_bool(BoolKind::Implies, a, b), c)) ==
          "(self.a implies self.b) implies self.c");
}

TEST_CASE("not parenthesizes comparisons but not calls") {
    auto size_cmp = o_cmp(CmpKind::Gt, o_collop(o_nav(o_self(), "account"), CollOpKind::Size),
                          o_int(100));
    CHECK(print_expr(o_not(size_cmp)) == "not (self.account->size() > 100)");
    CHECK(print_expr(o_not(o_collop(o_nav(o_self(), "account"), CollOpKind::IsEmpty))) ==
          "not self.account->isEmpty()");
    CHECK(print_expr(o_not(o_not(o_attr(o_self(), "gold")))) == "not not self.gold");
    CHECK(print_expr(o_not(o_bool(BoolKind::And, o_attr(o_self(), "a"),
                                  o_attr(o_self(), "b")))) ==
          "not (self.a and self.b)");
    // Inside a conjunction, not needs no parentheses of its own.
    CHECK(print_expr(o_bool(BoolKind::And, o_not(o_attr(o_self(), "a")),
                            o_attr(o_self(), "b"))) == "not self.a and self.b");
}

TEST_CASE("comparison operands tighter than the comparison print bare") {
    // A comparison inside a comparison would need parentheses, but the
    // translator never builds one; primaries never get them.
    auto inner = o_collop(o_nav(o_self(), "account"), CollOpKind::Size);
    CHECK(print_expr(o_cmp(CmpKind::Le, inner, o_int(3))) == "self.account->size() <= 3");
}

TEST_CASE("invariants print context and labeled body") {
    OclConstraint c;
    c.context_class = "Customer";
    c.kind = ConstraintKind::Inv;
    c.label = "rule_1";
    c.body = o_collop(o_nav(o_self(), "account"), CollOpKind::NotEmpty);
    CHECK(print_constraint(c) == "context Customer\n"
                                 "inv rule_1: self.account->notEmpty()");
}

TEST_CASE("pre and post constraints print the operation signature") {
    OclConstraint c;
    c.context_class = "Customer";
    c.operation = OperationSig{"opens", {{"account", "Account"}}};
    c.kind = ConstraintKind::Pre;
    c.label = "rule_2";
    c.body = o_cmp(CmpKind::Ge, o_attr(o_var("account"), "balance"), o_int(0));
    CHECK(print_constraint(c) == "context Customer::opens(account : Account)\n"
                                 "pre rule_2: account.balance >= 0");

    c.kind = ConstraintKind::Post;
    c.label = "rule_3";
    c.body = o_true();
    CHECK(print_constraint(c) == "context Customer::opens(account : Account)\n"
                                 "post rule_3: true");
}

TEST_CASE("files separate constraints with one blank line and end with a newline") {
    OclConstraint a;
    a.context_class = "Customer";
    a.kind = ConstraintKind::Inv;
    a.label = "rule_1";
    a.body = o_attr(o_self(), "gold");
    OclConstraint b = a;
    b.label = "rule_2";

    CHECK(print_ocl_file({}) == "");
    CHECK(print_ocl_file({a}) == "context Customer\ninv rule_1: self.gold\n");
    CHECK(print_ocl_file({a, b}) == "context Customer\n"
                                    "inv rule_1: self.gold\n"
                                    "\n"
                                    "context Customer\n"
                                    "inv rule_2: self.gold\n");
}

TEST_CASE("printing is deterministic for structurally equal trees") {
    auto build = [] {
        return o_bool(BoolKind::Implies,
                      o_iter(o_all_instances("Customer"), IterKind::Exists, "x",
                             o_attr(o_var("x"), "gold")),
                      o_not(o_cmp(CmpKind::Gt,
                                  o_collop(o_nav(o_self(), "account"), CollOpKind::Size),
                                  o_int(2))));
    };
    CHECK(print_expr(build()) == print_expr(build()));
    CHECK(print_expr(build()) ==
          "Customer.allInstances()->exists(x | x.gold) implies "
          "not (self.account->size() > 2)");
}
