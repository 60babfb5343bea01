#include "doctest.h"

#include "sbvr2ocl/vocabulary.hpp"

#include "test_util.hpp"

using namespace sbvr2ocl;

TEST_CASE("bank vocabulary loads with all declaration kinds") {
    Vocabulary v = testutil::bank_vocab();

    REQUIRE(v.object_types.size() == 4);
    CHECK(v.object_types[0].term == "customer");
    CHECK(v.object_types[0].plural == "customers");

    // Three declared fact types plus the unary fact type a characteristic adds.
    REQUIRE(v.fact_types.size() == 4);
    CHECK(v.fact_types[0].kind == FactKind::Categorization);
    CHECK(v.fact_types[1].kind == FactKind::Associative);
    CHECK(v.fact_types[1].verb_phrase == "has");
    CHECK_FALSE(v.fact_types[1].is_action);
    CHECK(v.fact_types[2].verb_phrase == "opens");
    CHECK(v.fact_types[2].is_action);
    CHECK(v.fact_types[3].kind == FactKind::CharacteristicUnary);

    REQUIRE(v.attributes.size() == 2);
    CHECK(v.attributes[0].name == "name");
    CHECK(v.attributes[0].value_type == ValueType::String);
    CHECK(v.attributes[1].name == "balance");
    CHECK(v.attributes[1].value_type == ValueType::Integer);

    REQUIRE(v.characteristics.size() == 1);
    CHECK(v.characteristics[0].adjective == "gold");

    REQUIRE(v.individuals.size() == 2);
    CHECK(v.individuals[0].name == "John Doe");
    CHECK(v.individuals[1].name == "Main Vault");
}

TEST_CASE("term resolution covers singular and plural spellings") {
    Vocabulary v = testutil::bank_vocab();

    auto customer = v.find_term("customer");
    REQUIRE(customer.has_value());
    CHECK(v.resolve_term("customer") == customer);
    CHECK(v.resolve_term("customers") == customer);
    CHECK_FALSE(v.resolve_term("zebra").has_value());

    auto savings = v.find_term("savings_account");
    REQUIRE(savings.has_value());
    CHECK(v.resolve_term("savings_accounts") == savings);
}

TEST_CASE("conformance follows categorization upward") {
    Vocabulary v = testutil::bank_vocab();
    auto account = *v.find_term("account");
    auto savings = *v.find_term("savings_account");
    auto customer = *v.find_term("customer");

    CHECK(v.conforms(savings, account));
    CHECK(v.conforms(account, account));
    CHECK_FALSE(v.conforms(account, savings));
    CHECK_FALSE(v.conforms(customer, account));
    CHECK(v.parent_of(savings) == account);
    CHECK_FALSE(v.parent_of(account).has_value());
}

TEST_CASE("fact lookup accepts conforming participants") {
    Vocabulary v = testutil::bank_vocab();
    auto customer = *v.find_term("customer");
    auto account = *v.find_term("account");
    auto savings = *v.find_term("savings_account");
    auto loan = *v.find_term("loan");

    auto has_account = v.find_fact(customer, "has", account);
    REQUIRE(has_account.has_value());
    // A savings account is an account, so the same fact type accepts it.
    CHECK(v.find_fact(customer, "has", savings) == has_account);
    CHECK_FALSE(v.find_fact(customer, "has", loan).has_value());
    CHECK_FALSE(v.find_fact(account, "has", account).has_value());
    CHECK(v.verb_opens_fact(customer, "opens"));
    CHECK_FALSE(v.verb_opens_fact(account, "opens"));
}

TEST_CASE("attribute and characteristic lookup follow categorization") {
    Vocabulary v = testutil::bank_vocab();
    auto customer = *v.find_term("customer");
    auto account = *v.find_term("account");
    auto savings = *v.find_term("savings_account");

    CHECK(v.find_attribute(customer, "name").has_value());
    CHECK(v.find_attribute(savings, "balance").has_value());
    // balance is declared on the subtype; the supertype does not see it.
    CHECK_FALSE(v.find_attribute(account, "balance").has_value());
    CHECK(v.find_characteristic(customer, "gold").has_value());
    CHECK_FALSE(v.find_characteristic(account, "gold").has_value());
}

TEST_CASE("declared multiplicity is returned and defaults fill the rest") {
    Vocabulary v = testutil::bank_vocab();
    auto customer = *v.find_term("customer");
    auto account = *v.find_term("account");
    auto loan = *v.find_term("loan");

    auto has = *v.find_fact(customer, "has", account);
    MultiplicityDecl m = v.multiplicity_for(has);
    CHECK(m.forward.low == 0);
    CHECK_FALSE(m.forward.high.has_value());
    CHECK(m.reverse.low == 1);
    CHECK(m.reverse.high == 1);
    CHECK(m.forward_unique);

    auto opens = *v.find_fact(customer, "opens", loan);
    MultiplicityDecl d = v.multiplicity_for(opens);
    CHECK(d.forward.low == 0);
    CHECK_FALSE(d.forward.high.has_value());
    CHECK(d.reverse.low == 0);
    CHECK_FALSE(d.reverse.high.has_value());
}

TEST_CASE("duplicate declarations are rejected") {
    auto r = load_vocabulary("term customer\nterm customer\n");
    CHECK_FALSE(r.ok());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].code == "E_DUPLICATE");
    CHECK(r.diagnostics[0].line == 2);
}

TEST_CASE("fact types over undeclared terms are rejected") {
    auto r = load_vocabulary("term customer\nfact customer has account\n");
    CHECK_FALSE(r.ok());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].code == "E_UNKNOWN_TERM");
}

TEST_CASE("malformed directives are rejected with positions") {
    auto r = load_vocabulary("term\n");
    CHECK_FALSE(r.ok());
    REQUIRE_FALSE(r.diagnostics.empty());
    CHECK(r.diagnostics[0].code == "E_SYNTAX");
    CHECK(r.diagnostics[0].line == 1);
}

TEST_CASE("forward references between directives resolve") {
    // The fact type appears before the terms it mentions.
    Vocabulary v = testutil::load_vocab("fact customer has account\n"
                                        "term customer\n"
                                        "term account\n");
    auto customer = *v.find_term("customer");
    auto account = *v.find_term("account");
    CHECK(v.find_fact(customer, "has", account).has_value());
}

TEST_CASE("printing and reloading a vocabulary is the identity") {
    Vocabulary v = testutil::bank_vocab();
    std::string text = print_vocabulary(v);
    auto reloaded = load_vocabulary(text);
    REQUIRE(reloaded.ok());
    CHECK(*reloaded.value == v);
    CHECK(print_vocabulary(*reloaded.value) == text);
}
