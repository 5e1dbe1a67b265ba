// chainring: construct simplex codes over finite chain rings, compute weight
// distributions, Gray images, and run the verification suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chainring/verify.hpp"
#include "json.hpp"

using namespace chainring;
using nlohmann::json;

namespace {

// exit codes: 0 ok, 1 verify FAIL, 2 invalid spec, 3 cap breach, 4 mismatch
int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::SizeCapExceeded:
        case ErrorCode::EnumerationCapExceeded:
            return 3;
        case ErrorCode::VerificationMismatch:
            return 4;
        default:
            return 2;
    }
}

struct RingOptions {
    std::string family = "zps";
    uint32_t p = 2;
    uint32_t r = 1;
    uint32_t s = 1;
    std::vector<uint32_t> modulus;
    std::string spec_file;

    RingSpec to_spec() const {
        if (!spec_file.empty()) return parse_ring_spec_file(spec_file);
        RingSpec spec;
        std::string f = family;
        if (f == "zps") spec.family = Family::Zps;
        else if (f == "gr") spec.family = Family::GaloisRing;
        else if (f == "fqu") spec.family = Family::FqU;
        else spec.family = parse_family(f);
        spec.p = p;
        spec.r = r;
        spec.s = s;
        spec.modulus = modulus;
        return spec;
    }
};

void add_ring_flags(CLI::App* cmd, RingOptions& opt) {
    cmd->add_option("--family", opt.family, "ring family: zps, gr, fqu");
    cmd->add_option("-p,--prime", opt.p, "characteristic prime p");
    cmd->add_option("-r,--ext", opt.r, "residue field extension degree r");
    cmd->add_option("-s,--nilpotency", opt.s, "nilpotency index s");
    cmd->add_option("--modulus", opt.modulus,
                    "defining polynomial coefficients, low-to-high");
    cmd->add_option("--spec-file", opt.spec_file,
                    "read the ring spec from a key=value file instead of flags");
}

MatrixFamily parse_code_family(const std::string& name) {
    if (name == "alpha") return MatrixFamily::alpha;
    if (name == "beta") return MatrixFamily::beta;
    throw Error(ErrorCode::InvalidSpec, "code family must be alpha or beta");
}

uint64_t enumeration_cap_from_env() {
    if (const char* env = std::getenv("CHAINRING_MAX_CODEWORDS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw Error(ErrorCode::InvalidSpec,
                    "CHAINRING_MAX_CODEWORDS must be a positive integer");
    }
    return kDefaultEnumerationCap;
}

void write_output(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidSpec, "cannot open output file: " + path);
    out << body;
}

std::string distribution_braces(const WeightDistribution& dist) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [w, c] : dist.counts) {
        if (!first) out << ", ";
        first = false;
        out << w << ":" << c;
    }
    out << "}";
    return out.str();
}

json distribution_json(const WeightDistribution& dist) {
    json counts = json::object();
    for (const auto& [w, c] : dist.counts) counts[std::to_string(w)] = c;
    return {{"kind", weight_kind_name(dist.kind)},
            {"length", dist.length},
            {"counts", counts},
            {"enumerator", dist.enumerator_polynomial()}};
}

int cmd_ring(const RingOptions& opt, const std::string& format) {
    RingPtr ring = Ring::make(opt.to_spec());
    if (format == "structured") {
        json out = {{"family", family_name(ring->spec().family)},
                    {"p", ring->p()},
                    {"r", ring->r()},
                    {"s", ring->s()},
                    {"q", ring->q()},
                    {"size", ring->size()}};
        json chain = json::array();
        for (uint32_t j = 0; j <= ring->s(); ++j)
            chain.push_back(ring->ideal_elements(j).size());
        out["ideal_chain"] = chain;
        if (ring->size() <= 64) {
            json elems = json::array();
            for (uint64_t x = 0; x < ring->size(); ++x)
                elems.push_back(ring->to_string(Elem(x)));
            out["elements"] = elems;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "ring: " << ring_spec_to_string(ring->spec()) << "\n";
    std::cout << "p=" << ring->p() << " r=" << ring->r() << " s=" << ring->s()
              << " q=" << ring->q() << " |R|=" << ring->size() << "\n";
    std::cout << "ideal chain:";
    for (uint32_t j = 0; j <= ring->s(); ++j) {
        if (j) std::cout << " >";
        std::cout << " " << ring->ideal_elements(j).size();
    }
    std::cout << "\n";
    if (ring->size() <= 64) {
        std::cout << "elements (ascending):";
        for (uint64_t x = 0; x < ring->size(); ++x)
            std::cout << " " << ring->pretty(Elem(x));
        std::cout << "\n";
    } else {
        std::cout << "elements: " << ring->size() << " (listing truncated above 64)\n";
    }
    return 0;
}

int cmd_construct(const RingOptions& opt, const std::string& family, uint32_t k,
                  const std::string& out_path) {
    RingPtr ring = Ring::make(opt.to_spec());
    SimplexCode code = make_simplex_code(ring, parse_code_family(family), k);
    write_output(out_path, export_matrix(code.gen));
    std::ostringstream type_line;
    type_line << "type (" << code.length() << "; " << k;
    for (uint32_t i = 1; i < ring->s(); ++i) type_line << ", 0";
    type_line << ")";
    std::cout << type_line.str() << "\n";
    return 0;
}

int cmd_weights(const RingOptions& opt, const std::string& family, uint32_t k,
                const std::string& kind_name, bool empirical_only, bool predicted_only,
                const std::string& format, uint64_t cap) {
    RingPtr ring = Ring::make(opt.to_spec());
    MatrixFamily fam = parse_code_family(family);
    WeightKind kind = parse_weight_kind(kind_name);

    const bool want_empirical = !predicted_only;
    const bool want_predicted = !empirical_only;
    const bool both = want_empirical && want_predicted;

    WeightDistribution empirical, predicted;
    if (want_empirical) {
        SimplexCode code = make_simplex_code(ring, fam, k);
        empirical = empirical_distribution(code, kind, cap);
    }
    if (want_predicted) predicted = predicted_distribution(fam, kind, ring->q(), ring->s(), k);
    const WeightDistribution& primary = want_empirical ? empirical : predicted;

    if (format == "structured") {
        json out = {{"family", family},
                    {"k", k},
                    {"ring", ring_spec_to_string(ring->spec())}};
        if (want_empirical) out["empirical"] = distribution_json(empirical);
        if (want_predicted) out["predicted"] = distribution_json(predicted);
        if (fam == MatrixFamily::beta && k == 1) out["note"] = "trivial for k=1";
        if (both) out["match"] = (empirical.counts == predicted.counts);
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << primary.to_csv();
    } else {
        if (want_empirical)
            std::cout << "empirical " << distribution_braces(empirical) << "\n";
        if (want_predicted)
            std::cout << "predicted " << distribution_braces(predicted) << "\n";
        std::cout << "W(X,Y) = " << primary.enumerator_polynomial() << "\n";
        if (fam == MatrixFamily::beta && k == 1)
            std::cout << "note: the distribution is trivial for k=1 (the full ring)\n";
    }

    if (both) {
        if (empirical.counts == predicted.counts) {
            if (format != "structured") std::cout << "MATCH\n";
            return 0;
        }
        for (const auto& [w, c] : empirical.counts) {
            auto it = predicted.counts.find(w);
            if (it == predicted.counts.end() || it->second != c) {
                std::cerr << "MISMATCH at weight " << w << ": empirical " << c
                          << ", predicted " << (it == predicted.counts.end() ? 0 : it->second)
                          << "\n";
                return 4;
            }
        }
        for (const auto& [w, c] : predicted.counts) {
            if (!empirical.counts.count(w)) {
                std::cerr << "MISMATCH at weight " << w << ": empirical 0, predicted " << c
                          << "\n";
                return 4;
            }
        }
    }
    return 0;
}

int cmd_gray(const RingOptions& opt, const std::string& family, uint32_t k,
             const std::string& out_path, uint64_t cap) {
    RingPtr ring = Ring::make(opt.to_spec());
    MatrixFamily fam = parse_code_family(family);

    GrayImageParams params = gray_image_parameters(fam, ring, k, /*verify=*/true, cap);

    std::ostringstream body;
    SimplexCode code = make_simplex_code(ring, fam, k);
    enumerate_codewords(
        code.gen,
        [&](std::span<const Elem>, std::span<const Elem> cw) {
            FieldVector img = gray_map_vector(*ring, cw);
            for (size_t i = 0; i < img.size(); ++i) {
                if (i) body << ' ';
                body << img[i];
            }
            body << "\n";
        },
        cap);
    write_output(out_path, body.str());
    std::cout << "(" << params.length << ", " << params.size << ", " << params.distance
              << ")\n";
    return 0;
}

int cmd_verify(bool default_sweep, const std::string& sweep_file, uint64_t cap) {
    std::vector<SweepEntry> sweep;
    if (default_sweep) {
        sweep = ::chainring::default_sweep();
    } else if (!sweep_file.empty()) {
        sweep = parse_sweep_file(sweep_file);
    } else {
        std::cerr << "verify requires --default-sweep or --sweep-file\n";
        return 2;
    }
    if (sweep.empty()) {
        std::cout << "warning: empty sweep, no checks run\n";
        return 0;
    }
    std::vector<CheckResult> results = run_sweep(sweep, cap);
    uint64_t failures = 0;
    for (const CheckResult& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        if (!r.pass) ++failures;
    }
    std::cout << results.size() << " checks, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simplex codes over finite chain rings"};
    app.require_subcommand(1);
    app.fallthrough();  // let --format appear after the subcommand too

    std::string format = "text";
    app.add_option("--format", format, "output format: text, csv, structured")
        ->check(CLI::IsMember({"text", "csv", "structured"}));

    RingOptions ring_opt, construct_opt, weights_opt, gray_opt;
    std::string construct_family, weights_family, gray_family;
    uint32_t construct_k = 1, weights_k = 1, gray_k = 1;
    std::string construct_out, gray_out;
    std::string kind = "hamming";
    bool empirical_only = false, predicted_only = false;
    bool default_sweep = false;
    std::string sweep_file;

    CLI::App* ring_cmd = app.add_subcommand("ring", "print a ring summary");
    add_ring_flags(ring_cmd, ring_opt);

    CLI::App* construct_cmd = app.add_subcommand("construct", "emit a generator matrix");
    construct_cmd->add_option("code", construct_family, "alpha or beta")->required();
    construct_cmd->add_option("-k,--rank", construct_k, "number of rows k")->required();
    construct_cmd->add_option("-o,--output", construct_out, "output file (default stdout)");
    add_ring_flags(construct_cmd, construct_opt);

    CLI::App* weights_cmd = app.add_subcommand("weights", "weight distribution report");
    weights_cmd->add_option("code", weights_family, "alpha or beta")->required();
    weights_cmd->add_option("-k,--rank", weights_k, "number of rows k")->required();
    weights_cmd->add_option("--kind", kind, "hamming or homogeneous");
    weights_cmd->add_flag("--empirical", empirical_only, "enumerated distribution only");
    weights_cmd->add_flag("--predicted", predicted_only, "closed-form distribution only");
    weights_cmd->add_flag("--both", "compare both (the default)");
    add_ring_flags(weights_cmd, weights_opt);

    CLI::App* gray_cmd = app.add_subcommand("gray", "Gray image and its parameters");
    gray_cmd->add_option("code", gray_family, "alpha or beta")->required();
    gray_cmd->add_option("-k,--rank", gray_k, "number of rows k")->required();
    gray_cmd->add_option("-o,--output", gray_out, "output file (default stdout)");
    add_ring_flags(gray_cmd, gray_opt);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_flag("--default-sweep", default_sweep, "use the built-in ring sweep");
    verify_cmd->add_option("--sweep-file", sweep_file, "sweep description file");

    CLI11_PARSE(app, argc, argv);

    try {
        uint64_t cap = enumeration_cap_from_env();
        if (ring_cmd->parsed()) return cmd_ring(ring_opt, format);
        if (construct_cmd->parsed())
            return cmd_construct(construct_opt, construct_family, construct_k, construct_out);
        if (weights_cmd->parsed()) {
            if (empirical_only && predicted_only) {
                std::cerr << "--empirical and --predicted are mutually exclusive\n";
                return 2;
            }
            return cmd_weights(weights_opt, weights_family, weights_k, kind, empirical_only,
                               predicted_only, format, cap);
        }
        if (gray_cmd->parsed()) return cmd_gray(gray_opt, gray_family, gray_k, gray_out, cap);
        if (verify_cmd->parsed()) return cmd_verify(default_sweep, sweep_file, cap);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
