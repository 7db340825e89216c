#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "iforms/checks.hpp"
#include "iforms/error.hpp"
#include "iforms/expr.hpp"
#include "iforms/json_io.hpp"
#include "iforms/render.hpp"

namespace {

using namespace iforms;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Env build_env(const std::string& coords, const std::vector<std::string>& vf_specs) {
    Env env{Space(split_names(coords)), {}, {}};
    for (const auto& spec : vf_specs) {
        auto [name, field] = parse_vector_field(spec, env);
        env.vector_fields.insert_or_assign(name, field);
    }
    return env;
}

void add_map(Env& env, const std::string& spec, const std::string& target_coords) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error("map syntax is \"name: comp, comp, ...\"");
    std::string name = spec.substr(0, colon);
    auto b = name.find_first_not_of(" \t");
    auto e = name.find_last_not_of(" \t");
    name = b == std::string::npos ? "" : name.substr(b, e - b + 1);
    if (name.empty()) throw Error("map needs a name");
    // reuse the vector-field component parser over the source space
    auto [ignored, comps_holder] = parse_vector_field("m:" + spec.substr(colon + 1), env);
    Space target(split_names(target_coords));
    std::vector<Poly> comps = comps_holder.components();
    if (comps.size() != target.dim())
        throw Error("map component count must match the target dimension");
    env.maps.insert_or_assign(name, SmoothMap(env.space, std::move(target), std::move(comps)));
}

void print_form(const Form& w, const std::string& format) {
    if (format == "text")
        std::cout << to_text(w) << "\n";
    else if (format == "json")
        std::cout << to_json_string(w) << "\n";
    else if (format == "latex")
        std::cout << to_latex(w) << "\n";
    else
        throw Error("unknown format: " + format);
}

int print_check_results(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        std::cout << "[" << r.suite << "] " << r.identity << ": "
                  << (r.passed ? "PASS" : "FAIL") << " (" << r.cases << " cases)";
        if (!r.passed) std::cout << "\n  counterexample: " << r.counterexample;
        std::cout << "\n";
    }
    return all_passed(results) ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"iforms: exact calculator for iterated differential forms"};
    app.require_subcommand(1);

    std::string expr_text, coords = "x,y", format = "text";
    std::vector<std::string> vf_specs;
    std::string map_spec, target_coords, op_text;
    std::string tensor_file, vfs_file;
    std::size_t order = 0;
    std::string suite = "all";
    std::uint64_t seed = 0;
    int cases = 100;

    auto add_expr_options = [&](CLI::App* cmd, bool need_expr) {
        cmd->add_option("-e,--expr", expr_text, "expression to evaluate")->required(need_expr);
        cmd->add_option("--coords", coords, "comma-separated coordinate names");
        cmd->add_option("--vf", vf_specs, "vector field binding, e.g. \"X: y,0\"");
        cmd->add_option("--map", map_spec, "smooth map binding, e.g. \"phi: u^2, u*v\"");
        cmd->add_option("--target", target_coords, "target coordinates of --map");
        cmd->add_option("--format", format, "text | json | latex");
    };

    CLI::App* eval_cmd = app.add_subcommand("eval", "parse and evaluate an expression");
    add_expr_options(eval_cmd, true);

    CLI::App* apply_cmd = app.add_subcommand("apply", "apply an operator to an expression");
    add_expr_options(apply_cmd, true);
    apply_cmd->add_option("--op", op_text, "operator, e.g. \"lie[X]\", \"d1\", \"H2\"")->required();

    CLI::App* tensor_cmd = app.add_subcommand("tensor", "covariant tensor workflows");
    tensor_cmd->require_subcommand(1);
    CLI::App* embed_cmd = tensor_cmd->add_subcommand("embed", "embed a tensor into Lambda_inf");
    embed_cmd->add_option("--tensor", tensor_file, "tensor JSON file")->required();
    embed_cmd->add_option("--format", format, "text | json | latex");
    CLI::App* extract_cmd =
        tensor_cmd->add_subcommand("extract", "read a tensor back off a form expression");
    add_expr_options(extract_cmd, true);
    extract_cmd->add_option("--order", order, "tensor order p")->required();
    CLI::App* teval_cmd = tensor_cmd->add_subcommand("eval", "evaluate a tensor on vector fields");
    teval_cmd->add_option("--tensor", tensor_file, "tensor JSON file")->required();
    teval_cmd->add_option("--vfs", vfs_file, "vector fields JSON file")->required();

    CLI::App* check_cmd = app.add_subcommand("check", "run randomized identity suites");
    check_cmd->add_option("--suite", suite,
                          "commutation | partition | kappa | homotopy | tensor | pullback | all");
    check_cmd->add_option("--seed", seed, "RNG seed");
    check_cmd->add_option("--cases", cases, "cases per identity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval_cmd) {
            Env env = build_env(coords, vf_specs);
            if (!map_spec.empty()) add_map(env, map_spec, target_coords);
            print_form(eval_string(expr_text, env), format);
            return kExitOk;
        }
        if (*apply_cmd) {
            Env env = build_env(coords, vf_specs);
            if (!map_spec.empty()) add_map(env, map_spec, target_coords);
            print_form(eval_string(op_text + "(" + expr_text + ")", env), format);
            return kExitOk;
        }
        if (*tensor_cmd) {
            if (*embed_cmd) {
                print_form(embed(tensor_from_json(read_file(tensor_file))), format);
                return kExitOk;
            }
            if (*extract_cmd) {
                Env env = build_env(coords, vf_specs);
                Form w = eval_string(expr_text, env);
                TensorCheck check = is_tensor(w, order);
                if (!check.tensor) {
                    std::cerr << "not a covariant tensor; obstruction: "
                              << to_text(check.obstruction) << "\n";
                    return kExitCheckFailure;
                }
                std::cout << to_json_string(*check.tensor) << "\n";
                return kExitOk;
            }
            if (*teval_cmd) {
                CovariantTensor t = tensor_from_json(read_file(tensor_file));
                std::vector<VectorField> fields = vector_fields_from_json(read_file(vfs_file));
                std::cout << to_text(evaluate_insertion(embed(t), fields)) << "\n";
                return kExitOk;
            }
        }
        if (*check_cmd) {
            return print_check_results(run_checks(suite, seed, cases));
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
