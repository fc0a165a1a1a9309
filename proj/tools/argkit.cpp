#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "argkit/graph_classes.hpp"
#include "argkit/io.hpp"
#include "argkit/reductions.hpp"
#include "argkit/semantics.hpp"
#include "argkit/validate.hpp"

namespace {

using namespace argkit;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Framework load_framework(const std::string& fmt, const std::string& path) {
    std::string text = read_file(path);
    return fmt == "tgf" ? parse_tgf(text) : parse_apx(text);
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) {
            out.push_back(csv.substr(pos));
            break;
        }
        out.push_back(csv.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

const char* formats_text = R"(input formats

apx   arg(NAME). and att(A,B). statements, one or more per line, % comments.
      Attacks may precede declarations; every endpoint must be declared.
      Canonical output: arg lines in argument order, att lines sorted by pair.

tgf   one node per line (first token is the id, rest ignored), then #, then
      edges as "FROM TO" pairs. The # may be omitted for a node-only graph.

qdimacs
      p cnf <vars> <clauses>, then at most one "a ... 0" line followed by at
      most one "e ... 0" line, then exactly <clauses> clause lines, each a
      0-terminated list of nonzero literals. Every variable must be quantified
      exactly once. Tautological and empty clauses are rejected.

dimacs
      same as qdimacs without quantifier lines; used with reduce -r5 --target.

output
      extensions print as [a,b,c] in canonical set order; acceptance prints
      YES or NO; verify prints a JSON array of reports.
)";

std::vector<std::string> semantics_names() {
    std::vector<std::string> out;
    for (SemanticsId s : all_semantics()) out.push_back(to_string(s));
    return out;
}

std::vector<std::string> class_names() {
    std::vector<std::string> out;
    for (GraphClassId g : all_graph_classes()) out.push_back(to_string(g));
    return out;
}

std::vector<std::string> claim_names() {
    std::vector<std::string> out;
    for (ClaimId c : all_claims()) out.push_back(to_string(c));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"argkit: argumentation framework toolkit"};
    app.require_subcommand(1);

    auto* cmd_solve = app.add_subcommand("solve", "enumerate extensions");
    std::string solve_fmt = "apx", solve_sem, solve_file;
    cmd_solve->add_option("-f,--format", solve_fmt, "input format")
        ->check(CLI::IsMember({"apx", "tgf"}));
    cmd_solve->add_option("-s,--semantics", solve_sem, "semantics")
        ->required()
        ->check(CLI::IsMember(semantics_names()));
    cmd_solve->add_option("file", solve_file, "framework file")->required();

    auto* cmd_accept = app.add_subcommand("accept", "credulous/skeptical acceptance");
    std::string accept_mode, accept_sem, accept_arg, accept_fmt = "apx", accept_file;
    cmd_accept->add_option("mode", accept_mode, "cred or skept")
        ->required()
        ->check(CLI::IsMember({"cred", "skept"}));
    cmd_accept->add_option("-f,--format", accept_fmt)->check(CLI::IsMember({"apx", "tgf"}));
    cmd_accept->add_option("-s,--semantics", accept_sem)
        ->required()
        ->check(CLI::IsMember(semantics_names()));
    cmd_accept->add_option("-a,--argument", accept_arg, "argument name")->required();
    cmd_accept->add_option("file", accept_file)->required();

    auto* cmd_classify = app.add_subcommand("classify", "graph class membership");
    std::string classify_fmt = "apx", classify_file;
    cmd_classify->add_option("-f,--format", classify_fmt)->check(CLI::IsMember({"apx", "tgf"}));
    cmd_classify->add_option("file", classify_file)->required();

    auto* cmd_distance = app.add_subcommand("distance", "deletion distance to a graph class");
    std::string dist_cls, dist_fmt = "apx", dist_file, dist_verify;
    cmd_distance->add_option("-g,--graph-class", dist_cls)
        ->required()
        ->check(CLI::IsMember(class_names()));
    cmd_distance->add_option("-f,--format", dist_fmt)->check(CLI::IsMember({"apx", "tgf"}));
    cmd_distance->add_option("--verify-set", dist_verify,
                             "comma-separated set: check it instead of searching");
    cmd_distance->add_option("file", dist_file)->required();

    auto* cmd_reduce = app.add_subcommand("reduce", "build a reduction framework");
    int reduce_id = 0;
    std::string reduce_variant, reduce_target, reduce_meta, reduce_file;
    cmd_reduce->add_option("-r,--reduction", reduce_id)->required()->check(CLI::Range(1, 6));
    cmd_reduce->add_option("--variant", reduce_variant)
        ->check(CLI::IsMember({"literal", "repaired"}));
    cmd_reduce->add_option("--target", reduce_target, "minsat target variable (reduction 5)");
    cmd_reduce->add_option("--meta", reduce_meta, "write a JSON sidecar to this path");
    cmd_reduce->add_option("input", reduce_file, "qdimacs input (dimacs for -r5)")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a claim over a generated family");
    std::string verify_claim, verify_variant;
    FamilyParams fp;
    int verify_samples = 0;
    bool verify_timings = false;
    cmd_verify->add_option("--claim", verify_claim)
        ->required()
        ->check(CLI::IsMember(claim_names()));
    cmd_verify->add_option("--max-y", fp.max_y);
    cmd_verify->add_option("--max-z", fp.max_z);
    cmd_verify->add_option("--max-clauses", fp.max_clauses);
    cmd_verify->add_option("--max-width", fp.max_width);
    cmd_verify->add_option("--max-vars", fp.max_vars);
    cmd_verify->add_option("--exhaustive-args", fp.exhaustive_args);
    cmd_verify->add_option("--max-args", fp.max_args);
    cmd_verify->add_option("--seed", fp.seed);
    auto* samples_opt =
        cmd_verify->add_option("--samples", verify_samples, "sample instead of enumerating");
    cmd_verify->add_option("--variant", verify_variant)
        ->check(CLI::IsMember({"literal", "repaired"}));
    cmd_verify->add_flag("--timings", verify_timings, "include wall_time_ms in the report");

    auto* cmd_formats = app.add_subcommand("formats", "describe the file formats");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*cmd_solve) {
            Framework f = load_framework(solve_fmt, solve_file);
            ExtensionSet es = extensions(f, semantics_from_string(solve_sem));
            for (const auto& e : es) std::cout << format_extension(f, e) << "\n";
        } else if (*cmd_accept) {
            Framework f = load_framework(accept_fmt, accept_file);
            SemanticsId s = semantics_from_string(accept_sem);
            bool yes = accept_mode == "cred" ? credulous(f, s, accept_arg)
                                             : skeptical(f, s, accept_arg);
            std::cout << (yes ? "YES" : "NO") << "\n";
        } else if (*cmd_classify) {
            Framework f = load_framework(classify_fmt, classify_file);
            for (GraphClassId g : all_graph_classes())
                std::cout << to_string(g) << " " << (is_member(f, g) ? "YES" : "NO") << "\n";
            std::cout << "noeven_ignoring_2cycles "
                      << (is_member_noeven_ignoring_2cycles(f) ? "YES" : "NO") << "\n";
        } else if (*cmd_distance) {
            Framework f = load_framework(dist_fmt, dist_file);
            GraphClassId g = graph_class_from_string(dist_cls);
            if (!dist_verify.empty()) {
                ArgSet del = f.set_of(split_csv(dist_verify));
                std::cout << (verify_deletion(f, g, del) ? "YES" : "NO") << "\n";
            } else {
                DistanceCertificate d = distance(f, g);
                std::cout << d.k << "\n" << format_extension(f, d.deletion_set) << "\n";
            }
        } else if (*cmd_reduce) {
            std::optional<ReductionVariant> variant;
            if (!reduce_variant.empty()) variant = variant_from_string(reduce_variant);
            if (variant == ReductionVariant::Repaired && reduce_id != 3 && reduce_id != 5)
                throw UsageError("reduction " + std::to_string(reduce_id) +
                                 " has no repaired variant");
            if (!reduce_target.empty() && reduce_id != 5)
                throw UsageError("--target applies to reduction 5 only");
            std::string text = read_file(reduce_file);
            std::optional<ReductionArtifact> art;
            switch (reduce_id) {
            case 1: art = reduce1(parse_qdimacs(text)); break;
            case 2: art = reduce2(parse_qdimacs(text)); break;
            case 3:
                art = reduce3(parse_qdimacs(text), variant.value_or(ReductionVariant::Literal));
                break;
            case 4: art = reduce4(parse_qdimacs(text)); break;
            case 5: {
                if (reduce_target.empty())
                    throw UsageError("reduction 5 needs --target <variable>");
                MinsatInstance inst{parse_dimacs(text), reduce_target};
                art = reduce5(inst, variant.value_or(ReductionVariant::Repaired));
                break;
            }
            case 6: art = reduce6(parse_qdimacs(text)); break;
            }
            std::cout << emit_apx(art->framework);
            if (!reduce_meta.empty()) {
                std::ofstream out(reduce_meta, std::ios::binary);
                if (!out) throw UsageError("cannot write file: " + reduce_meta);
                out << artifact_meta_json(*art);
            }
        } else if (*cmd_verify) {
            if (*samples_opt) {
                fp.exhaustive = false;
                fp.samples = verify_samples;
            }
            if (!verify_variant.empty()) fp.variant = variant_from_string(verify_variant);
            std::vector<VerificationReport> reports =
                run_claim(claim_from_string(verify_claim), fp);
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : reports) arr.push_back(report_to_json(r, verify_timings));
            std::cout << arr.dump(2) << "\n";
        } else if (*cmd_formats) {
            std::cout << formats_text;
        }
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
