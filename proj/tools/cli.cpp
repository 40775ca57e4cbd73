/*
 * Copyright 2026 The roughring Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <sstream>

#include <CLI11.hpp>

#include "roughring/auditor.hpp"
#include "roughring/ideal.hpp"
#include "roughring/ring.hpp"
#include "roughring/rough_ideal.hpp"

namespace roughring::cli {

namespace {

// Set literal, plus tuple labels for product rings.
std::string show(const FiniteRing& ring, const ElementSet& s) {
    std::string out = s.to_string();
    if (!ring.has_tuple_labels()) return out;
    out += " = {";
    bool first = true;
    s.for_each([&](Element e) {
        if (!first) out += ',';
        out += ring.label(e);
        first = false;
    });
    return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void ring_info(const FiniteRing& ring, std::ostream& out) {
    out << "ring: " << ring.name() << '\n';
    out << "order: " << ring.size() << '\n';
    out << "zero: " << ring.zero() << '\n';
    out << "unit: " << ring.one() << '\n';
    if (ring.is_zero_ring()) out << "note: zero ring (0 = 1), no maximal ideals\n";
    out << "elements:";
    for (Element e : ring.elements()) {
        out << ' ' << e;
        if (ring.has_tuple_labels()) out << '=' << ring.label(e);
    }
    out << '\n';
}

void list_ideals(const FiniteRing& ring, bool with_classes, std::ostream& out) {
    const auto ideals = all_ideals(ring);
    out << ring.name() << " has " << ideals.size() << " ideal(s)\n";
    for (const Ideal& i : ideals) {
        out << show(ring, i.members());
        if (with_classes) {
            const IdealClassification c = classify(ring, i);
            out << "  proper=" << yes_no(c.is_proper) << " maximal=" << yes_no(c.is_maximal)
                << " prime=" << yes_no(c.is_prime) << " principal=";
            if (c.is_principal) out << "<" << *c.principal_generator << ">";
            else out << "no";
        }
        out << '\n';
    }
}

void approximate(const FiniteRing& ring, const Ideal& ideal, const ElementSet& x, std::ostream& out) {
    const RoughApproximation a = apr(ring, ideal, x);
    out << "ring: " << ring.name() << '\n';
    out << "ideal: " << show(ring, ideal.members()) << '\n';
    out << "set: " << show(ring, x) << '\n';
    out << "lower: " << show(ring, a.lower) << '\n';
    out << "upper: " << show(ring, a.upper) << '\n';
    out << "boundary: " << show(ring, a.boundary) << '\n';
    out << "rough: " << (a.rough ? "true" : "false") << '\n';
}

std::vector<PropertyGroup> parse_groups(const std::string& list, bool* explicit_all) {
    std::vector<PropertyGroup> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "all") {
            *explicit_all = true;
            return {PropertyGroup::SpaceProps, PropertyGroup::Prop3_1, PropertyGroup::Prop4_1,
                    PropertyGroup::Prop4_2};
        }
        out.push_back(parse_property_group(tok));
    }
    if (out.empty()) throw Error(ErrorKind::ParseError, "empty --props list");
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rough approximations of subsets of finite commutative rings"};
    app.name("roughring");
    app.require_subcommand(1, 1);

    std::string ring_spec, ideal_spec, set_literal, a_literal, b_literal;
    std::string op = "sum", sum_mode_name = "pairwise", mode_name, props = "all", format = "text";
    bool classify_flag = false, fail_on_cx = false, force = false;
    std::uint64_t samples = Strategy{}.sample_count, seed = 0;

    auto* ring_info_cmd = app.add_subcommand("ring-info", "Order, unit and element listing");
    ring_info_cmd->add_option("ring", ring_spec, "Z<n>, Z<m>xZ<n> or table:<path>")->required();

    auto* ideals_cmd = app.add_subcommand("ideals", "List every ideal");
    ideals_cmd->add_option("ring", ring_spec)->required();
    ideals_cmd->add_flag("--classify", classify_flag, "Show maximal/prime/principal flags");

    auto* approx_cmd = app.add_subcommand("approx", "Lower/upper approximation of a subset");
    approx_cmd->add_option("ring", ring_spec)->required();
    approx_cmd->add_option("--ideal", ideal_spec, "{..}, principal(s), gen(s,..), maximal#k")->required();
    approx_cmd->add_option("--set", set_literal, "Subset literal {e1,e2,...}")->required();

    auto* algebra_cmd = app.add_subcommand("algebra", "Set sum A+B or set product AB");
    algebra_cmd->add_option("ring", ring_spec)->required();
    algebra_cmd->add_option("--a", a_literal)->required();
    algebra_cmd->add_option("--b", b_literal)->required();
    algebra_cmd->add_option("--op", op)->check(CLI::IsMember({"sum", "product"}));
    algebra_cmd->add_option("--sum-mode", sum_mode_name)->check(CLI::IsMember({"pairwise", "closure"}));

    auto* audit_cmd = app.add_subcommand("audit", "Check the approximation properties by search");
    audit_cmd->add_option("ring", ring_spec)->required();
    audit_cmd->add_option("--ideal", ideal_spec)->required();
    audit_cmd->add_option("--props", props, "Comma list of space, 3-1, 4-1, 4-2 or all");
    audit_cmd->add_option("--mode", mode_name)->check(CLI::IsMember({"exhaustive", "randomized"}));
    audit_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
    audit_cmd->add_option("--seed", seed);
    audit_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));
    audit_cmd->add_option("--sum-mode", sum_mode_name)->check(CLI::IsMember({"pairwise", "closure"}));
    audit_cmd->add_flag("--fail-on-counterexample", fail_on_cx);
    audit_cmd->add_flag("--force", force, "Audit 3-1 even when the ideal is not maximal");

    std::vector<const char*> argv{"roughring"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        const FiniteRing ring = parse_ring_spec(ring_spec);
        const SumMode sum_mode = sum_mode_name == "closure" ? SumMode::Closure : SumMode::Pairwise;

        if (*ring_info_cmd) {
            ring_info(ring, out);
        } else if (*ideals_cmd) {
            list_ideals(ring, classify_flag, out);
        } else if (*approx_cmd) {
            const Ideal ideal = parse_ideal_spec(ring, ideal_spec);
            approximate(ring, ideal, ElementSet::parse(set_literal, ring.size()), out);
        } else if (*algebra_cmd) {
            const ElementSet a = ElementSet::parse(a_literal, ring.size());
            const ElementSet b = ElementSet::parse(b_literal, ring.size());
            const ElementSet r = op == "sum" ? set_sum(ring, a, b, sum_mode) : set_product(ring, a, b);
            out << (op == "sum" ? "A+B: " : "AB: ") << show(ring, r) << '\n';
        } else if (*audit_cmd) {
            const Ideal ideal = parse_ideal_spec(ring, ideal_spec);
            bool asked_all = false;
            std::vector<PropertyGroup> groups = parse_groups(props, &asked_all);

            Strategy strategy;
            strategy.sample_count = samples;
            strategy.seed = seed;
            if (mode_name.empty())
                strategy.mode = ring.size() <= strategy.max_universe_for_exhaustive_unary
                                    ? Strategy::Mode::Exhaustive
                                    : Strategy::Mode::Randomized;
            else
                strategy.mode = mode_name == "exhaustive" ? Strategy::Mode::Exhaustive
                                                          : Strategy::Mode::Randomized;

            // "all" quietly drops 3-1 for non-maximal ideals; naming it does not.
            std::string skipped;
            if (asked_all && !force && !is_maximal(ring, ideal)) {
                std::erase(groups, PropertyGroup::Prop3_1);
                skipped = "Prop3_1 skipped: ideal is not maximal";
            }
            AuditReport report = audit_groups(ring, ideal, groups, strategy, sum_mode, force);
            if (!skipped.empty()) report.remarks.push_back(skipped);
            out << (format == "machine" ? to_json(report) : to_text(report));
            if (fail_on_cx && report.has_counterexample()) return kCounterexample;
        }
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        const bool syntax = e.kind() == ErrorKind::ParseError;
        return syntax ? kParseError : kValidationError;
    }
}

} // namespace roughring::cli
