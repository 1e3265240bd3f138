// Command-line surface over the C library: build rings and models,
// classify functors, run the dictionary suite, export JSON/DOT.
//
// Exit codes: 0 success, 1 property failure (with certificate in the
// output), 2 malformed usage or invalid input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exodromy.h"

namespace {

constexpr int kExitProperty = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    out << text;
    return 0;
}

int fail_invalid() {
    std::cerr << "error: " << exo_last_error() << "\n";
    return kExitUsage;
}

struct Freed {
    char* s = nullptr;
    ~Freed() { exo_free(s); }
};

// EXODROMY_CAPS="objects,morphisms,ring_elements" (zero keeps a default)
int apply_caps_env() {
    const char* env = std::getenv("EXODROMY_CAPS");
    if (env == nullptr) return 0;
    int vals[3] = {0, 0, 0};
    std::stringstream ss(env);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',') && i < 3) {
        try {
            vals[i++] = std::stoi(item);
        } catch (...) {
            std::cerr << "error: EXODROMY_CAPS must be up to three integers\n";
            return kExitUsage;
        }
    }
    if (exo_set_caps(vals[0], vals[1], vals[2]) != EXO_OK) return fail_invalid();
    return 0;
}

int parse_ring_file(const std::string& path, exo_ring** out) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (exo_ring_parse(text.c_str(), out) != EXO_OK) return fail_invalid();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite Galois-category toolkit"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "Write output to a file instead of stdout")
        ->capture_default_str();

    // ring build|decompose|perfect <ring.json>
    auto* ring = app.add_subcommand("ring", "Build and analyze finite commutative rings");
    ring->require_subcommand(1);
    std::string ring_file;
    for (const char* sub : {"build", "decompose", "perfect"}) {
        auto* s = ring->add_subcommand(sub);
        s->add_option("input", ring_file, "ring.v1 JSON file")->required();
    }
    ring->get_subcommand("build")->description("Validate and emit normalized tables");
    ring->get_subcommand("decompose")->description("Decompose into local factors");
    ring->get_subcommand("perfect")->description("Test perfect reducedness");

    // gal build [<ring.json>] --level N | --cyclotomic m --primes ...
    auto* gal = app.add_subcommand("gal", "Build Galois-category models");
    auto* gal_build = gal->add_subcommand("build", "Model of a ring or a number ring");
    gal->require_subcommand(1);
    std::string gal_ring_file;
    int level = 12;
    int cyclotomic_m = 0;
    std::vector<int> primes;
    std::vector<int> subgroup;
    std::string format = "json";
    gal_build->add_option("input", gal_ring_file, "ring.v1 JSON file");
    gal_build->add_option("--level", level, "Frobenius truncation level")
        ->capture_default_str();
    gal_build->add_option("--cyclotomic", cyclotomic_m,
                          "Cyclotomic modulus m for a number-ring model");
    gal_build->add_option("--primes", primes, "Rational primes to include")
        ->delimiter(',');
    gal_build->add_option("--subgroup", subgroup,
                          "Subgroup of (Z/m)^x fixing the subfield (default: full group)")
        ->delimiter(',');
    gal_build->add_option("--format", format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();

    // classify <functor.json>
    auto* classify = app.add_subcommand("classify", "Classify a functor (report.v1)");
    std::string functor_file;
    classify->add_option("input", functor_file, "functor.v1 JSON file")->required();

    // check --suite default --level N [--list] [--corpus file]
    auto* check = app.add_subcommand("check", "Run the dictionary suite");
    std::string suite = "default";
    std::string corpus_file;
    bool list_only = false;
    int check_level = 12;
    check->add_option("--suite", suite, "Suite name")->capture_default_str();
    check->add_option("--level", check_level, "Frobenius truncation level")
        ->capture_default_str();
    check->add_option("--corpus", corpus_file, "Corpus override (rings only)");
    check->add_flag("--list", list_only, "Print case names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (int rc = apply_caps_env(); rc != 0) return rc;

    if (ring->parsed()) {
        exo_ring* r = nullptr;
        if (int rc = parse_ring_file(ring_file, &r); rc != 0) return rc;
        Freed out;
        exo_status st = EXO_OK;
        if (ring->get_subcommand("build")->parsed()) {
            st = exo_ring_to_json(r, &out.s);
        } else if (ring->get_subcommand("decompose")->parsed()) {
            st = exo_ring_decompose(r, &out.s);
        } else {
            st = exo_ring_perfect(r, &out.s);
        }
        exo_ring_release(r);
        if (st == EXO_INVALID) return fail_invalid();
        if (int rc = write_output(out.s, out_path); rc != 0) return rc;
        return st == EXO_PROPERTY_FALSE ? kExitProperty : 0;
    }

    if (gal->parsed()) {
        exo_gal* g = nullptr;
        if (cyclotomic_m > 0) {
            if (!gal_ring_file.empty()) {
                std::cerr << "error: --cyclotomic excludes a ring input file\n";
                return kExitUsage;
            }
            if (primes.empty()) primes = {2, 3, 5, 7, 11, 13};
            if (exo_gal_cyclotomic(cyclotomic_m, primes.data(),
                                   static_cast<int>(primes.size()), subgroup.data(),
                                   static_cast<int>(subgroup.size()), &g) != EXO_OK)
                return fail_invalid();
        } else {
            if (gal_ring_file.empty()) {
                std::cerr << "error: need a ring input file or --cyclotomic\n";
                return kExitUsage;
            }
            exo_ring* r = nullptr;
            if (int rc = parse_ring_file(gal_ring_file, &r); rc != 0) return rc;
            exo_status st = exo_gal_from_ring(r, level, &g);
            exo_ring_release(r);
            if (st != EXO_OK) return fail_invalid();
        }
        Freed out;
        exo_status st = format == "dot" ? exo_gal_to_dot(g, &out.s)
                                        : exo_gal_to_json(g, &out.s);
        exo_gal_release(g);
        if (st != EXO_OK) return fail_invalid();
        return write_output(out.s, out_path);
    }

    if (classify->parsed()) {
        std::string text;
        try {
            text = read_file(functor_file);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        Freed out;
        if (exo_classify(text.c_str(), &out.s) != EXO_OK) return fail_invalid();
        return write_output(out.s, out_path);
    }

    // check
    if (suite != "default") {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return kExitUsage;
    }
    if (list_only) {
        Freed names;
        if (exo_check_list(check_level, &names.s) != EXO_OK) return fail_invalid();
        std::ostringstream os;
        for (const auto& n : nlohmann::json::parse(names.s)) os << n.get<std::string>() << "\n";
        return write_output(os.str(), out_path);
    }
    Freed scorecard;
    exo_status st;
    if (!corpus_file.empty()) {
        std::string text;
        try {
            text = read_file(corpus_file);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        st = exo_check_corpus(text.c_str(), check_level, &scorecard.s);
    } else {
        st = exo_check_suite(check_level, &scorecard.s);
    }
    if (st == EXO_INVALID) return fail_invalid();
    if (int rc = write_output(scorecard.s, out_path); rc != 0) return rc;
    return st == EXO_PROPERTY_FALSE ? kExitProperty : 0;
}
