#include "ccr/cli.hpp"

#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccr/oracle.hpp"
#include "ccr/verify.hpp"

namespace ccr {

namespace {

using nlohmann::json;

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonFlags {
    int p = 0;
    int r = 1;
    int e = 1;
    int s = 0;
    long long m = 1;
    std::string lambda;
};

void add_field_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--p", f.p, "characteristic (prime)")->required();
    cmd->add_option("--r", f.r, "residue field degree");
}

void add_ring_flags(CLI::App* cmd, CommonFlags& f) {
    add_field_flags(cmd, f);
    cmd->add_option("--e", f.e, "nilpotency index")->required();
    cmd->add_option("--s", f.s, "power of p in the length");
    cmd->add_option("--m", f.m, "coprime part of the length")->required();
    cmd->add_option("--lambda", f.lambda, "ring element, u-parts joined by ';'")->required();
}

void validate_field(const CommonFlags& f) {
    if (!is_prime(f.p)) throw validation_error("--p must be prime");
    if (f.r < 1 || f.r > 6) throw validation_error("--r out of range [1,6]");
}

CodeParams params_from_flags(const CommonFlags& f) {
    validate_field(f);
    if (f.e < 1) throw validation_error("--e must be >= 1");
    if (f.s < 0) throw validation_error("--s must be >= 0");
    if (f.m < 1) throw validation_error("--m must be >= 1");
    if (f.m % f.p == 0) throw validation_error("gcd(m, p) = 1 required");
    RingContext R = make_ring(f.p, f.r, f.e);
    RingElement lam;
    try {
        lam = ring_elem_from_text(R, f.lambda);
    } catch (const std::exception& ex) {
        throw validation_error(std::string("bad --lambda: ") + ex.what());
    }
    try {
        return make_code_params(R, f.m, f.s, lam);
    } catch (const std::invalid_argument& ex) {
        throw validation_error(ex.what());
    }
}

json big_to_json(const BigInt& v) {
    if (v >= 0 && v <= BigInt(9007199254740992LL))  // 2^53, exact in every JSON reader
        return json((long long)v.convert_to<long long>());
    return json(v.str());
}

json fp_to_json(const FieldContext& F, const FieldPoly& f) {
    json arr = json::array();
    for (const auto& c : f.c) arr.push_back(field_elem_to_text(F, c));
    return arr;
}

json rp_to_json(const RingContext& R, const RingPoly& f) {
    json arr = json::array();
    for (const auto& c : f.c) arr.push_back(ring_elem_to_text(R, c));
    return arr;
}

json factorization_to_json(const FieldContext& F, const Factorization& fac,
                           long long multiplicity) {
    json jf;
    jf["lambda0"] = field_elem_to_text(F, fac.lambda0);
    jf["m"] = fac.m;
    json factors = json::array();
    for (const auto& f : fac.factors) factors.push_back(fp_to_json(F, f));
    jf["factors"] = factors;
    jf["multiplicity"] = multiplicity;
    return jf;
}

std::vector<long long> parse_exponents(const std::string& s) {
    std::vector<long long> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty()) throw validation_error("bad --exponents: " + s);
        out.push_back(std::stoll(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

const char* status_name(SelfDualStatus st) {
    switch (st) {
        case SelfDualStatus::Yes: return "yes";
        case SelfDualStatus::No: return "no";
        case SelfDualStatus::NotApplicable: return "not-applicable";
        case SelfDualStatus::Conflicting: return "conflicting";
        case SelfDualStatus::Undecided: return "undecided";
    }
    return "?";
}

json principal_card_json(const PrincipalCode& c) {
    CardinalityReport rep = principal_cardinality(c);
    json j;
    j["exponents"] = c.exponents;
    j["cardinality"] = big_to_json(rep.value);
    j["log_p_cardinality"] = rep.log_p;
    j["paper_printed_log_p"] = rep.printed_log_p;
    j["paper_printed_differs"] = rep.printed_differs;
    j["paper_printed_cardinality"] =
        rep.printed_value ? big_to_json(*rep.printed_value) : json(nullptr);
    return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"constacyclic codes over F_{p^r}[u]/(u^e): construction, counting, duals, "
                 "self-duality, cyclic equivalence and exhaustive verification"};
    app.require_subcommand(1);

    CommonFlags ff;  // field-info
    auto* cmd_field = app.add_subcommand("field-info", "canonical field data");
    add_field_flags(cmd_field, ff);

    CommonFlags fo;  // factor
    std::string lambda0_text = "1";
    auto* cmd_factor = app.add_subcommand("factor", "factor x^m - lambda0 over F_{p^r}");
    add_field_flags(cmd_factor, fo);
    cmd_factor->add_option("--m", fo.m, "exponent m, gcd(m,p)=1")->required();
    cmd_factor->add_option("--lambda0", lambda0_text, "field element, digits joined by ','");
    cmd_factor->add_option("--s", fo.s, "repeated-root power: reports (x^m-lambda0')^{p^s}");

    CommonFlags fc;  // codes count/list
    bool force_list = false;
    auto* cmd_codes = app.add_subcommand("codes", "code families");
    cmd_codes->require_subcommand(1);
    auto* cmd_count = cmd_codes->add_subcommand("count", "number of codes in the family");
    add_ring_flags(cmd_count, fc);
    auto* cmd_list = cmd_codes->add_subcommand("list", "every exponent vector with cardinality");
    add_ring_flags(cmd_list, fc);
    cmd_list->add_flag("--force", force_list, "allow more than 10^5 codes");

    CommonFlags fd;  // code card/dual
    std::string exps_text;
    auto* cmd_code = app.add_subcommand("code", "one principal code");
    cmd_code->require_subcommand(1);
    auto* cmd_card = cmd_code->add_subcommand("card", "cardinality");
    add_ring_flags(cmd_card, fd);
    cmd_card->add_option("--exponents", exps_text, "comma-separated s_i")->required();
    auto* cmd_dual = cmd_code->add_subcommand("dual", "dual description");
    add_ring_flags(cmd_dual, fd);
    cmd_dual->add_option("--exponents", exps_text, "comma-separated s_i")->required();

    CommonFlags fs;  // selfdual
    auto* cmd_sd = app.add_subcommand("selfdual", "self-duality decision and generators");
    add_ring_flags(cmd_sd, fs);

    CommonFlags fe;  // equiv
    auto* cmd_eq = app.add_subcommand("equiv", "equivalence to cyclic codes");
    add_ring_flags(cmd_eq, fe);

    std::string verify_case;
    bool verify_all = false;
    auto* cmd_verify = app.add_subcommand("verify", "oracle cross-checks");
    cmd_verify->add_option("--case", verify_case, "single check name");
    cmd_verify->add_flag("--all", verify_all, "run every registered check");

    std::vector<const char*> argv;
    argv.push_back("chaincodes");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << json{{"error", e.what()}, {"type", "validation"}}.dump() << "\n";
        return 2;
    }

    try {
        json j;
        if (cmd_field->parsed()) {
            validate_field(ff);
            FieldContext F = make_field(ff.p, ff.r);
            j["field"] = field_to_text(F);
            j["q"] = F.q;
            std::string mod;
            for (size_t i = 0; i < F.modulus.size(); ++i) {
                if (i) mod.push_back(',');
                mod += std::to_string(F.modulus[i]);
            }
            j["modulus"] = mod;
            j["primitive"] = field_elem_to_text(F, primitive_element(F));
        } else if (cmd_factor->parsed()) {
            validate_field(fo);
            if (fo.m < 1) throw validation_error("--m must be >= 1");
            if (fo.m % fo.p == 0) throw validation_error("gcd(m, p) = 1 required");
            if (fo.s < 0) throw validation_error("--s must be >= 0");
            FieldContext F = make_field(fo.p, fo.r);
            FieldElement lam0;
            try {
                lam0 = field_elem_from_text(F, lambda0_text);
            } catch (const std::exception& ex) {
                throw validation_error(std::string("bad --lambda0: ") + ex.what());
            }
            RepeatedFactorization rf = repeated_factorization(F, fo.m, fo.s, lam0);
            j["field"] = field_to_text(F);
            j["factorization"] = factorization_to_json(F, rf.base, rf.multiplicity);
            j["l"] = rf.base.l;
            long long cls = cyclotomic_class_count(F.q, fo.m);
            j["cyclotomic_classes_mod_m"] = cls;
            j["classes_match_l"] = cls == rf.base.l;
        } else if (cmd_count->parsed() || cmd_list->parsed()) {
            CodeParams P = params_from_flags(fc);
            if (P.kind != LambdaKind::UnitU1)
                throw std::domain_error(
                    "codes count/list applies to lambda with nonzero u^1 part");
            if (cmd_count->parsed()) {
                j["count"] = big_to_json(count_codes(P));
                j["l"] = P.fac.l;
                j["exponent_bound"] = P.exp_bound();
                long long cls = cyclotomic_class_count(P.ring.field.q, P.m);
                j["cyclotomic_classes_mod_m"] = cls;
                j["classes_match_l"] = cls == P.fac.l;
            } else {
                BigInt total = count_codes(P);
                if (total > 100000 && !force_list)
                    throw std::domain_error("codes list: more than 10^5 codes; use --force");
                json arr = json::array();
                std::vector<long long> v(P.fac.l, 0);
                bool more = true;
                while (more) {
                    PrincipalCode c = build_principal(P, v);
                    arr.push_back(principal_card_json(c));
                    more = false;
                    for (size_t i = 0; i < v.size(); ++i) {
                        if (v[i] < P.exp_bound()) {
                            ++v[i];
                            std::fill(v.begin(), v.begin() + i, 0);
                            more = true;
                            break;
                        }
                    }
                }
                j["codes"] = arr;
                j["count"] = big_to_json(total);
            }
        } else if (cmd_card->parsed() || cmd_dual->parsed()) {
            CodeParams P = params_from_flags(fd);
            std::vector<long long> exps = parse_exponents(exps_text);
            if ((long long)exps.size() != P.fac.l)
                throw validation_error("--exponents must list " + std::to_string(P.fac.l) +
                                       " values (one per canonical factor)");
            PrincipalCode c = build_principal(P, exps);
            if (cmd_card->parsed()) {
                j = principal_card_json(c);
                j["kind"] = "principal";
                j["generator"] = rp_to_json(P.ring, principal_generator(c));
            } else {
                DualDescription d = dual_principal(c);
                j["kind"] = "principal";
                j["exponents"] = c.exponents;
                j["lambda_inv"] = ring_elem_to_text(P.ring, d.lambda_inv);
                j["dual_exponents"] = d.exponents;
                j["dual_generator"] = rp_to_json(P.ring, d.generator);
                j["self_dual"] = is_self_dual(c);
            }
        } else if (cmd_sd->parsed()) {
            CodeParams P = params_from_flags(fs);
            SelfDualReport rep = self_dual_exists(P);
            j["status"] = status_name(rep.status);
            j["exists"] = rep.status == SelfDualStatus::Yes
                              ? json(true)
                              : (rep.status == SelfDualStatus::No ? json(false) : json(nullptr));
            j["reason"] = rep.reason;
            j["criterion"] = {{"applicable", rep.criterion_applicable},
                              {"m_even", rep.m_even},
                              {"k", rep.k},
                              {"t", rep.t},
                              {"verdict", rep.criterion_verdict}};
            j["witness"] = rep.witness_i
                               ? json(std::to_string(P.ring.field.q) + "^" +
                                      std::to_string(*rep.witness_i) + " = -1 mod " +
                                      std::to_string(P.m))
                               : json(nullptr);
            j["criteria_conflict"] = rep.criteria_conflict;
            j["regime_vacuous"] = rep.regime_vacuous;
            if (P.lambda_squares_to_one()) {
                SelfDualGenerators gens = self_dual_generators(P);
                json garr = json::array();
                for (size_t i = 0; i < gens.generators.size(); ++i) {
                    json gj;
                    gj["exponents"] = gens.exponent_vectors[i];
                    gj["generator"] = rp_to_json(P.ring, gens.generators[i]);
                    gj["verified"] = (bool)gens.verified[i];
                    garr.push_back(gj);
                }
                j["generators"] = garr;
                j["generator_note"] = gens.note;
            }
        } else if (cmd_eq->parsed()) {
            CodeParams P = params_from_flags(fe);
            EquivalenceReport rep = equivalent_to_cyclic(P);
            j["equivalent"] = rep.equivalent;
            j["delta0"] =
                rep.delta0 ? json(field_elem_to_text(P.ring.field, *rep.delta0)) : json(nullptr);
            j["criterion_odd_length"] = rep.criterion_odd_length;
            j["criterion_qr_mod4"] = rep.criterion_qs_mod4;
            j["reason"] = rep.reason;
        } else if (cmd_verify->parsed()) {
            if (!verify_all && verify_case.empty())
                throw validation_error("verify: pass --all or --case NAME");
            std::vector<CheckResult> results;
            if (verify_all)
                results = run_all_checks();
            else
                results.push_back(run_check(verify_case));
            json arr = json::array();
            bool all_pass = true;
            for (const auto& cr : results) {
                arr.push_back({{"name", cr.name}, {"pass", cr.pass}, {"detail", cr.detail}});
                all_pass = all_pass && cr.pass;
            }
            j["checks"] = arr;
            j["all_pass"] = all_pass;
            out << j.dump(2) << "\n";
            return all_pass ? 0 : 1;
        }
        out << j.dump(2) << "\n";
        return 0;
    } catch (const validation_error& ex) {
        err << json{{"error", ex.what()}, {"type", "validation"}}.dump() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        err << json{{"error", ex.what()}, {"type", "computation"}}.dump() << "\n";
        return 1;
    }
}

}  // namespace ccr
