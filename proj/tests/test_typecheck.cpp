#include "doctest.h"

#include "sbvr2ocl/typecheck.hpp"

#include "test_util.hpp"

using namespace sbvr2ocl;

namespace {

struct Fixture {
    Vocabulary v = testutil::bank_vocab();
    ClassModel m = testutil::derive_model(v);

    OclType type_of(const OclExprPtr& e, const std::string& self_class = "Customer") {
        TypeEnv env{{"self", OclType::klass(self_class)}};
        auto r = expr_type(e, env, m);
        for (const auto& d : r.diagnostics) CAPTURE(d.code + " " + d.message + " at " + d.location);
        REQUIRE(r.ok());
        return *r.type;
    }

    TypeDiagnostic error_of(const OclExprPtr& e, const std::string& self_class = "Customer") {
        TypeEnv env{{"self", OclType::klass(self_class)}};
        auto r = expr_type(e, env, m);
        REQUIRE_FALSE(r.ok());
        CHECK_FALSE(r.type.has_value());
        return r.diagnostics.front();
    }
};

} // namespace

TEST_CASE("literals and variables synthesize their declared types") {
    Fixture f;
    CHECK(f.type_of(o_int(3)) == OclType::integer());
    CHECK(f.type_of(o_lit(Value::string("a"))) == OclType::string());
    CHECK(f.type_of(o_lit(Value::boolean(true))) == OclType::boolean());
    CHECK(f.type_of(o_self()) == OclType::klass("Customer"));
    CHECK(f.type_of(o_self(), "Loan") == OclType::klass("Loan"));
}

TEST_CASE("attribute navigation yields the declared value type, following parents") {
    Fixture f;
    CHECK(f.type_of(o_attr(o_self(), "name")) == OclType::string());
    CHECK(f.type_of(o_attr(o_self(), "gold")) == OclType::boolean());
    CHECK(f.type_of(o_attr(o_self(), "balance"), "SavingsAccount") == OclType::integer());
    // Inherited end through the parent class.
    CHECK(f.type_of(o_nav(o_self(), "customer"), "SavingsAccount") == OclType::klass("Customer"));
}

TEST_CASE("association ends type by declared multiplicity") {
    Fixture f;
    // Upper bound * and unique: a Set.
    CHECK(f.type_of(o_nav(o_self(), "account")) == OclType::set_of(OclType::klass("Account")));
    // Upper bound 1: the plain class.
    CHECK(f.type_of(o_nav(o_self(), "customer"), "Account") == OclType::klass("Customer"));

    // A nonunique declaration produces a Bag.
    Vocabulary v2 = testutil::load_vocab("term library\n"
                                         "term book\n"
                                         "fact library holds book\n"
                                         "multiplicity library holds book : 0..* , 0..* nonunique\n");
    ClassModel m2 = testutil::derive_model(v2);
    TypeEnv env{{"self", OclType::klass("Library")}};
    auto r = expr_type(o_nav(o_self(), "book"), env, m2);
    REQUIRE(r.ok());
    CHECK(*r.type == OclType::bag_of(OclType::klass("Book")));
}

TEST_CASE("allInstances is a Set of the class") {
    Fixture f;
    CHECK(f.type_of(o_all_instances("SavingsAccount")) ==
          OclType::set_of(OclType::klass("SavingsAccount")));
    TypeDiagnostic d = f.error_of(o_all_instances("Zebra"));
    CHECK(d.code == "E_UNKNOWN_MEMBER");
}

TEST_CASE("iterators bind their variable to the element type") {
    Fixture f;
    // forAll/exists give Boolean; select preserves the collection type.
    auto gold = o_attr(o_var("x"), "gold");
    CHECK(f.type_of(o_iter(o_all_instances("Customer"), IterKind::ForAll, "x", gold)) ==
          OclType::boolean());
    CHECK(f.type_of(o_iter(o_all_instances("Customer"), IterKind::Exists, "x", gold)) ==
          OclType::boolean());
    CHECK(f.type_of(o_iter(o_all_instances("Customer"), IterKind::Select, "x", gold)) ==
          OclType::set_of(OclType::klass("Customer")));
    // Selecting from a Bag stays a Bag.
    Vocabulary v2 = testutil::load_vocab("term library\n"
                                         "term book\n"
                                         "fact library holds book\n"
                                         "multiplicity library holds book : 0..* , 0..* nonunique\n"
                                         "characteristic book is rare\n");
    ClassModel m2 = testutil::derive_model(v2);
    TypeEnv env{{"self", OclType::klass("Library")}};
    auto select = o_iter(o_nav(o_self(), "book"), IterKind::Select, "b",
                         o_attr(o_var("b"), "rare"));
    auto r = expr_type(select, env, m2);
    REQUIRE(r.ok());
    CHECK(*r.type == OclType::bag_of(OclType::klass("Book")));
}

TEST_CASE("a scalar object coerces to a one-element set in collection context") {
    Fixture f;
    // self.customer on Account has upper bound 1, so it is Class-typed;
    // applying a collection operation still works.
    CHECK(f.type_of(o_collop(o_nav(o_self(), "customer"), CollOpKind::Size), "Account") ==
          OclType::integer());
    CHECK(f.type_of(o_iter(o_nav(o_self(), "customer"), IterKind::Exists, "c",
                           o_attr(o_var("c"), "gold")),
                    "Account") == OclType::boolean());
}

TEST_CASE("collection operations on primitives are E_NOT_A_COLLECTION") {
    Fixture f;
    TypeDiagnostic d = f.error_of(o_collop(o_attr(o_self(), "balance"), CollOpKind::Size),
                                  "SavingsAccount");
    CHECK(d.code == "E_NOT_A_COLLECTION");
    TypeDiagnostic d2 = f.error_of(o_iter(o_attr(o_self(), "name"), IterKind::Exists, "c",
                                          o_lit(Value::boolean(true))));
    CHECK(d2.code == "E_NOT_A_COLLECTION");
}

TEST_CASE("collection operations type as Integer or Boolean") {
    Fixture f;
    auto nav = o_nav(o_self(), "account");
    CHECK(f.type_of(o_collop(nav, CollOpKind::Size)) == OclType::integer());
    CHECK(f.type_of(o_collop(nav, CollOpKind::IsEmpty)) == OclType::boolean());
    CHECK(f.type_of(o_collop(nav, CollOpKind::NotEmpty)) == OclType::boolean());
}

TEST_CASE("ordered comparison requires Integer on both sides") {
    Fixture f;
    CHECK(f.type_of(o_cmp(CmpKind::Ge, o_attr(o_self(), "balance"), o_int(0)),
                    "SavingsAccount") == OclType::boolean());

    TypeDiagnostic d = f.error_of(o_cmp(CmpKind::Ge, o_attr(o_self(), "name"), o_int(5)));
    CHECK(d.code == "E_TYPE_MISMATCH");
    CHECK(d.message.find("String") != std::string::npos);

    TypeDiagnostic d2 = f.error_of(o_cmp(CmpKind::Lt, o_attr(o_self(), "gold"),
                                         o_lit(Value::boolean(true))));
    CHECK(d2.code == "E_TYPE_MISMATCH");
}

TEST_CASE("equality accepts equal or conforming types only") {
    Fixture f;
    CHECK(f.type_of(o_cmp(CmpKind::Eq, o_attr(o_self(), "name"), o_lit(Value::string("a")))) ==
          OclType::boolean());

    // Conformance in either direction: Account = SavingsAccount.
    auto acct = o_iter(o_nav(o_self(), "account"), IterKind::Exists, "a",
                       o_iter(o_all_instances("SavingsAccount"), IterKind::Exists, "s",
                              o_cmp(CmpKind::Eq, o_var("a"), o_var("s"))));
    CHECK(f.type_of(acct) == OclType::boolean());

    TypeDiagnostic d = f.error_of(o_cmp(CmpKind::Eq, o_attr(o_self(), "name"), o_int(5)));
    CHECK(d.code == "E_TYPE_MISMATCH");

    // Unrelated classes do not compare.
    auto unrelated = o_iter(o_nav(o_self(), "account"), IterKind::Exists, "a",
                            o_iter(o_nav(o_self(), "loan"), IterKind::Exists, "l",
                                   o_cmp(CmpKind::Eq, o_var("a"), o_var("l"))));
    TypeEnv env{{"self", OclType::klass("Customer")}};
    auto r = expr_type(unrelated, env, f.m);
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics.front().code == "E_TYPE_MISMATCH");
}

TEST_CASE("boolean connectives require Boolean operands") {
    Fixture f;
    TypeDiagnostic d = f.error_of(o_bool(BoolKind::And, o_attr(o_self(), "gold"),
                                         o_attr(o_self(), "name")));
    CHECK(d.code == "E_NOT_BOOLEAN");
    TypeDiagnostic d2 = f.error_of(o_not(o_attr(o_self(), "name")));
    CHECK(d2.code == "E_NOT_BOOLEAN");
    CHECK(f.type_of(o_not(o_attr(o_self(), "gold"))) == OclType::boolean());
}

TEST_CASE("iterator bodies must be Boolean") {
    Fixture f;
    TypeDiagnostic d = f.error_of(o_iter(o_all_instances("Customer"), IterKind::ForAll, "x",
                                         o_attr(o_var("x"), "name")));
    CHECK(d.code == "E_NOT_BOOLEAN");
    CHECK(d.location.find("body") != std::string::npos);
}

TEST_CASE("unknown members and variables are E_UNKNOWN_MEMBER with a path") {
    Fixture f;
    TypeDiagnostic attr = f.error_of(o_attr(o_self(), "age"));
    CHECK(attr.code == "E_UNKNOWN_MEMBER");
    TypeDiagnostic end = f.error_of(o_nav(o_self(), "accounts"));
    CHECK(end.code == "E_UNKNOWN_MEMBER");
    TypeDiagnostic var = f.error_of(o_var("ghost"));
    CHECK(var.code == "E_UNKNOWN_MEMBER");
    CHECK_FALSE(var.location.empty());
}

TEST_CASE("whole constraints demand a Boolean body and a known context") {
    Fixture f;
    OclConstraint c;
    c.context_class = "Customer";
    c.kind = ConstraintKind::Inv;
    c.label = "rule_1";
    c.body = o_collop(o_nav(o_self(), "account"), CollOpKind::NotEmpty);
    CHECK(typecheck(c, f.m).ok());

    c.body = o_collop(o_nav(o_self(), "account"), CollOpKind::Size);
    auto not_bool = typecheck(c, f.m);
    REQUIRE_FALSE(not_bool.ok());
    CHECK(not_bool.diagnostics.front().code == "E_NOT_BOOLEAN");

    c.context_class = "Ghost";
    auto unknown = typecheck(c, f.m);
    REQUIRE_FALSE(unknown.ok());
    CHECK(unknown.diagnostics.front().code == "E_UNKNOWN_MEMBER");
}

TEST_CASE("pre and post constraints see their operation parameters") {
    Fixture f;
    OclConstraint c;
    c.context_class = "Customer";
    c.operation = OperationSig{"opens", {{"loan", "Loan"}}};
    c.kind = ConstraintKind::Pre;
    c.label = "rule_2";
    // The parameter is an object; navigating its reverse end typechecks.
    c.body = o_iter(o_nav(o_var("loan"), "customer"), IterKind::Exists, "c",
                    o_attr(o_var("c"), "gold"));
    CHECK(typecheck(c, f.m).ok());

    // Without the operation, the parameter name is unknown.
    c.operation.reset();
    auto r = typecheck(c, f.m);
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics.front().code == "E_UNKNOWN_MEMBER");
}

TEST_CASE("the type grammar offers exactly six kinds") {
    // Scalars, classes, and the two unordered collections; nothing ordered.
    CHECK(OclType::integer().to_string() == "Integer");
    CHECK(OclType::string().to_string() == "String");
    CHECK(OclType::boolean().to_string() == "Boolean");
    CHECK(OclType::klass("Customer").to_string() == "Customer");
    CHECK(OclType::set_of(OclType::klass("Customer")).to_string() == "Set(Customer)");
    CHECK(OclType::bag_of(OclType::integer()).to_string() == "Bag(Integer)");
    static_assert(static_cast<int>(OclType::Kind::Bag) == 5,
                  "the six type kinds are Integer, String, Boolean, Class, Set, Bag");
}
