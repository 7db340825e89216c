// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Criteria 1-9 reuse the randomized identity suites from the library so the
// CLI `check` command and this binary exercise the same code paths.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "iforms/checks.hpp"
#include "iforms/expr.hpp"
#include "iforms/json_io.hpp"
#include "iforms/render.hpp"

namespace {

using namespace iforms;

constexpr std::uint64_t kSeed = 20260823;

bool g_all_ok = true;

void report(int number, const std::string& name, bool ok) {
    std::cout << "criterion " << number << " (" << name << "): " << (ok ? "PASS" : "FAIL")
              << "\n";
    if (!ok) g_all_ok = false;
}

/// True iff every listed identity is present in `results` and passed.
bool identities_pass(const std::vector<CheckResult>& results,
                     const std::set<std::string>& names) {
    std::set<std::string> pending = names;
    for (const auto& r : results) {
        if (!pending.count(r.identity)) continue;
        if (!r.passed) {
            std::cerr << "  [" << r.suite << "] " << r.identity
                      << " failed: " << r.counterexample << "\n";
            return false;
        }
        pending.erase(r.identity);
    }
    if (!pending.empty()) {
        for (const auto& n : pending) std::cerr << "  missing identity: " << n << "\n";
        return false;
    }
    return true;
}

bool suite_passes(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) {
            std::cerr << "  [" << r.suite << "] " << r.identity
                      << " failed: " << r.counterexample << "\n";
            return false;
        }
    return true;
}

bool text_roundtrip() {
    Env env{Space({"x", "y"}), {}, {}};
    gen::Rng rng(kSeed);
    for (int i = 0; i < 100; ++i) {
        Form w = gen::random_form(rng, env.space, 4, 4);
        std::string text = to_text(w);
        if (eval_string(text, env) != w) {
            std::cerr << "  text round-trip changed: " << text << "\n";
            return false;
        }
    }
    return true;
}

bool json_roundtrip() {
    Space space({"x", "y"});
    gen::Rng rng(kSeed + 1);
    for (int i = 0; i < 100; ++i) {
        Form w = gen::random_form(rng, space, 4, 4);
        std::string text = to_json_string(w);
        Form back = form_from_json(text);
        if (back != w || to_json_string(back) != text) {
            std::cerr << "  form JSON round-trip not bit-exact\n";
            return false;
        }
        CovariantTensor t = gen::random_tensor(rng, space, 1 + i % 3);
        std::string ttext = to_json_string(t);
        CovariantTensor tback = tensor_from_json(ttext);
        if (tback != t || to_json_string(tback) != ttext) {
            std::cerr << "  tensor JSON round-trip not bit-exact\n";
            return false;
        }
    }
    return true;
}

/// Runs the installed CLI once, capturing stdout; returns false on spawn
/// failure or nonzero exit.
bool run_cli(const std::string& args, std::string& output) {
    std::string command = std::string(IFORMS_CLI_PATH) + " " + args;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return false;
    output.clear();
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
    int status = pclose(pipe);
    return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

bool cli_check_deterministic() {
    const std::string args = "check --suite all --seed 42 --cases 10";
    std::string first, second;
    if (!run_cli(args, first)) {
        std::cerr << "  CLI check run did not exit 0\n";
        return false;
    }
    if (!run_cli(args, second) || first != second) {
        std::cerr << "  CLI check output is not deterministic per seed\n";
        return false;
    }
    if (first.find("FAIL") != std::string::npos) {
        std::cerr << "  CLI check reported a failing identity\n";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    auto commutation = run_checks("commutation", kSeed, 210);
    auto partition = run_checks("partition", kSeed, 110);
    auto kappa_results = run_checks("kappa", kSeed, 110);
    auto homotopy = run_checks("homotopy", kSeed, 110);
    auto tensor_results = run_checks("tensor", kSeed, 110);
    auto pullback_results = run_checks("pullback", kSeed, 60);

    report(1, "differential axioms d_k^2 = 0 and [d_i,d_j] = 0",
           identities_pass(commutation, {"d_k^2 = 0", "[d_i, d_j] = 0"}));
    report(2, "graded commutativity of the wedge",
           identities_pass(commutation, {"graded commutativity"}));
    report(3, "commutation relations of i_X, L_X, d",
           identities_pass(commutation, {"[i_X, i_Y] = 0", "[L_X, d_1] = 0",
                                         "[i_X, L_Y] = i_[X,Y]", "[L_X, L_Y] = L_[X,Y]"}));
    report(4, "slot relabeling kappa: display, involution, intertwining",
           suite_passes(kappa_results));
    report(5, "homotopy operator H2 and constructive exactness", suite_passes(homotopy));
    report(6, "partition formula equals the iterated differential", suite_passes(partition));
    report(7, "pullback functoriality", suite_passes(pullback_results));
    report(8, "tensor embedding: inverse, evaluation, equivariance, Lie",
           identities_pass(tensor_results,
                           {"extract . embed = id",
                            "insertion evaluation = component contraction",
                            "embed . permute(sigma) = kappa_sigma . embed",
                            "embed . lie_tensor = lie . embed"}));
    report(9, "tensor characterization with exhibited linearity violations",
           identities_pass(tensor_results, {"is_tensor classification + multilinearity"}));
    report(10, "CLI round-trips and deterministic check command",
           text_roundtrip() && json_roundtrip() && cli_check_deterministic());

    return g_all_ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
