// nsalg: command-line front end for the numerical semigroup algebra library.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsalg/fixtures.hpp"
#include "nsalg/nsalg.hpp"
#include "nsalg/spec_io.hpp"

namespace {

using nsalg::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;

const char* const kFooter = R"(Examples:
  $ nsalg classify -c 16,24 -e 16,24,31,46,44
  $ nsalg classify -c 22 -e 14,21,22,33 --json
  $ nsalg classify -c 2,3 -e 4,9 --scale 6
  $ nsalg apery -c 6 -e 3,5
  $ nsalg flat -c 9,15,21 -e 5,8,9
  $ nsalg rectangle -c 12 -e 2,3
  $ nsalg classify -c 2,3 -e 2,3,3/2
  $ nsalg oracle -c 14,22 -e 14,21,22,33
  $ nsalg fixtures --filter flat

Exit status: 0 ok, 1 fixture or oracle failure, 2 invalid input.)";

struct SpecOptions {
    std::string coefficient;
    std::string extension;
    std::string scale = "1";
    std::string label;
    std::string input;
    bool json = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("-c,--coefficient", coefficient, "coefficient generators, e.g. 16,24 or 3/2,5");
        cmd->add_option("-e,--extension", extension, "extension generators");
        cmd->add_option("-s,--scale", scale, "rational factor t: the coefficient semigroup is t*S");
        cmd->add_option("-l,--label", label, "label copied into the report");
        cmd->add_option("-i,--input", input, "TOML or JSON spec file")->check(CLI::ExistingFile);
        cmd->add_flag("--json", json, "emit JSON");
    }

    nsalg::io::AlgebraSpec spec() const {
        nsalg::io::AlgebraSpec s;
        if (!input.empty()) {
            s = nsalg::io::load_spec_file(input);
        } else {
            if (coefficient.empty() || extension.empty()) {
                throw nsalg::Error(nsalg::ErrorCode::ParseError, "give --input or both --coefficient and --extension");
            }
            s.coefficient = nsalg::io::parse_rat_list(coefficient);
            s.extension = nsalg::io::parse_rat_list(extension);
            s.scale = nsalg::Rat::parse(scale);
        }
        if (!label.empty()) s.label = label;
        return s;
    }
};

std::string join(const std::vector<nsalg::Int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

std::string join(const std::vector<nsalg::Rat>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
    return out;
}

std::string sizes_str(const std::vector<nsalg::Int>& sizes) { return sizes.empty() ? "1" : join(sizes, "x"); }

void print_header(std::ostream& os, const nsalg::ClassificationReport& rep, const std::optional<std::string>& label) {
    if (label) os << "label        " << *label << "\n";
    os << "algebra      <" << join(rep.extension) << "> over ";
    if (rep.scale_t != nsalg::Rat(1)) os << rep.scale_t.str() << "*";
    os << "<" << join(rep.coefficient) << ">\n";
    os << "exponents    multiples of 1/" << rep.common_scale << "\n";
    os << "d, d'        " << rep.d << ", " << rep.d_prime << "\n";
}

void print_apery(std::ostream& os, const nsalg::ClassificationReport& rep) {
    os << "apery        {" << join(rep.apery.exponents) << "}  (" << rep.apery.size() << ")\n";
    os << "minimal      {" << join(rep.minimal_monomials) << "}\n";
}

void print_flat(std::ostream& os, const nsalg::ClassificationReport& rep) {
    os << "flat         " << (rep.flat.is_flat ? "yes" : "no") << "  (" << rep.flat.apery_count << " Apery, d/d' = "
       << rep.flat.expected_count << ")\n";
    if (rep.flat.witness) {
        const auto& w = *rep.flat.witness;
        os << "witness      " << w.exponent << " = " << w.first.coefficient << " + " << w.first.apery << " = "
           << w.second.coefficient << " + " << w.second.apery << "\n";
    }
}

void print_rectangles(std::ostream& os, const nsalg::ClassificationReport& rep) {
    os << "rectangles   " << rep.rectangles.size() << "\n";
    for (const auto& ra : rep.rectangles) {
        os << "  " << sizes_str(ra.rectangle.sizes);
        if (ra.matrix) {
            const auto& b = *ra.matrix;
            os << "  det " << b.det << "  t (" << join(b.t) << ")  matrix [";
            for (std::size_t i = 0; i < b.n(); ++i) os << (i ? "; " : "") << join(b.matrix.rows()[i], " ");
            os << "]";
            if (ra.triangular_permutation) os << "  triangular (" << join(*ra.triangular_permutation) << ")";
        }
        os << "\n";
    }
}

void print_verdict(std::ostream& os, const nsalg::ClassificationReport& rep) {
    os << "gorenstein   " << (rep.gorenstein_indicator ? "unique maximal Apery monomial" : "no") << "\n";
    os << "verdict      " << nsalg::to_string(rep.ci) << "\n";
    for (auto r : rep.justification) os << "  " << nsalg::to_string(r) << ": " << nsalg::describe(r) << "\n";
    if (rep.ci == nsalg::CiVerdict::Unknown) os << "  reason: " << rep.unknown_reason << "\n";
    if (rep.bresinsky) {
        const auto& b = *rep.bresinsky;
        os << "bresinsky    c = (" << b.c[0] << "," << b.c[1] << "," << b.c[2] << "," << b.c[3] << ")";
        if (b.relation) {
            const auto& r = *b.relation;
            os << "  relation a = (" << r.alpha[0] << "," << r.alpha[1] << "," << r.alpha[2] << "," << r.alpha[3] << ")";
        } else {
            os << "  no relation";
        }
        if (!b.symmetric) os << "  (not symmetric)";
        os << "\n";
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(const SpecOptions& o) {
    const auto spec = o.spec();
    const auto rep = nsalg::classify(spec.to_pair());
    if (o.json) {
        emit(nsalg::io::report_json(rep, spec.label));
        return kExitOk;
    }
    print_header(std::cout, rep, spec.label);
    print_apery(std::cout, rep);
    print_flat(std::cout, rep);
    print_rectangles(std::cout, rep);
    print_verdict(std::cout, rep);
    return kExitOk;
}

int cmd_apery(const SpecOptions& o) {
    const auto spec = o.spec();
    const auto pair = spec.to_pair();
    if (o.json) {
        Json j = Json::object();
        j["label"] = spec.label ? Json(*spec.label) : Json(nullptr);
        j["exponent_scale"] = pair.common_scale();
        j["d"] = pair.d();
        j["d_prime"] = pair.d_prime();
        j["apery"] = pair.apery_set().exponents;
        j["minimal_monomials"] = pair.minimal_monomials();
        emit(j);
        return kExitOk;
    }
    std::cout << "apery        {" << join(pair.apery_set().exponents) << "}  (" << pair.apery_set().size() << ")\n";
    std::cout << "minimal      {" << join(pair.minimal_monomials()) << "}\n";
    return kExitOk;
}

int cmd_flat(const SpecOptions& o) {
    const auto spec = o.spec();
    const auto pair = spec.to_pair();
    const auto v = nsalg::is_flat(pair);
    const bool intersection = nsalg::check_flat_intersection(pair);
    if (o.json) {
        Json j = Json::object();
        j["label"] = spec.label ? Json(*spec.label) : Json(nullptr);
        j["flat"] = v.is_flat;
        j["apery_count"] = v.apery_count;
        j["expected_count"] = v.expected_count;
        j["flat_witness"] = v.witness ? Json(v.witness->exponent) : Json(nullptr);
        j["intersection_condition"] = intersection;
        emit(j);
        return kExitOk;
    }
    std::cout << "flat         " << (v.is_flat ? "yes" : "no") << "  (" << v.apery_count << " Apery, d/d' = "
              << v.expected_count << ")\n";
    if (v.witness) {
        const auto& w = *v.witness;
        std::cout << "witness      " << w.exponent << " = " << w.first.coefficient << " + " << w.first.apery << " = "
                  << w.second.coefficient << " + " << w.second.apery << "\n";
    }
    std::cout << "intersection " << (intersection ? "holds" : "fails") << "\n";
    return kExitOk;
}

int cmd_rectangle(const SpecOptions& o) {
    const auto spec = o.spec();
    const auto rep = nsalg::classify(spec.to_pair());
    if (o.json) {
        Json j = Json::object();
        j["label"] = spec.label ? Json(*spec.label) : Json(nullptr);
        j["minimal_monomials"] = rep.minimal_monomials;
        j["flat"] = rep.flat.is_flat;
        Json rects = Json::array();
        for (const auto& ra : rep.rectangles) rects.push_back(nsalg::io::rectangle_json(ra));
        j["rectangles"] = rects;
        emit(j);
        return kExitOk;
    }
    std::cout << "minimal      {" << join(rep.minimal_monomials) << "}\n";
    print_rectangles(std::cout, rep);
    return kExitOk;
}

int cmd_oracle(const SpecOptions& o) {
    const auto spec = o.spec();
    const auto pair = spec.to_pair();
    Json checks = Json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, const std::string& detail) {
        all_ok = all_ok && ok;
        checks.push_back(Json{{"check", name}, {"ok", ok}, {"detail", detail}});
    };
    const auto apery = nsalg::oracle::apery_by_definition(pair);
    record("apery", apery == pair.apery_set().exponents, "{" + join(apery) + "}");
    const auto mm = nsalg::oracle::minimal_monomials(pair);
    record("minimal_monomials", mm == pair.minimal_monomials(), "{" + join(mm) + "}");
    const auto scan = nsalg::oracle::unique_representation_scan(pair);
    record("unique_representation", scan.has_value() != nsalg::is_flat(pair).is_flat,
           scan ? "first repeated exponent " + std::to_string(*scan) : "all unique");
    if (pair.apery_set().size() <= nsalg::oracle::kMaxExhaustiveApery) {
        const auto sizes = nsalg::oracle::rectangle_by_exhaustion(pair);
        std::vector<std::vector<nsalg::Int>> fast;
        for (const auto& r : nsalg::find_rectangles(pair)) fast.push_back(r.sizes);
        std::string detail;
        for (const auto& s : sizes) detail += (detail.empty() ? "" : " ") + sizes_str(s);
        record("rectangles", sizes == fast, detail.empty() ? "none" : detail);
    }
    if (o.json) {
        emit(Json{{"label", spec.label ? Json(*spec.label) : Json(nullptr)}, {"ok", all_ok}, {"checks", checks}});
    } else {
        for (const auto& c : checks) {
            std::cout << (c["ok"].get<bool>() ? "ok       " : "MISMATCH ") << c["check"].get<std::string>() << "  "
                      << c["detail"].get<std::string>() << "\n";
        }
    }
    return all_ok ? kExitOk : kExitFailure;
}

int cmd_fixtures(const std::string& filter, bool json) {
    const auto results = nsalg::fixtures::run_all(filter);
    const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
    if (json) {
        Json arr = Json::array();
        for (const auto& r : results) {
            arr.push_back(Json{{"label", r.label}, {"passed", r.passed}, {"message", r.message}});
        }
        emit(Json{{"total", results.size()}, {"failed", failed}, {"results", arr}});
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "pass  " : "FAIL  ") << r.label;
            if (!r.passed) std::cout << "  " << r.message;
            std::cout << "\n";
        }
        std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " passed\n";
    }
    return failed == 0 ? kExitOk : kExitFailure;
}

std::string batch_line(const std::string& line, std::size_t line_no) {
    const std::string where = "line " + std::to_string(line_no);
    try {
        const auto spec = nsalg::io::spec_from_json_text(line, where);
        return nsalg::io::report_json(nsalg::classify(spec.to_pair()), spec.label).dump();
    } catch (const std::exception& e) {
        return Json{{"line", line_no}, {"error", e.what()}}.dump();
    }
}

int cmd_batch(const std::string& path, unsigned jobs) {
    std::vector<std::string> lines;
    std::vector<std::size_t> numbers;
    {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (path != "-") {
            file.open(path);
            if (!file) throw nsalg::Error(nsalg::ErrorCode::ParseError, "cannot open '" + path + "'");
            in = &file;
        }
        std::string line;
        std::size_t n = 0;
        while (std::getline(*in, line)) {
            ++n;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            lines.push_back(line);
            numbers.push_back(n);
        }
    }
    std::vector<std::string> out(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) out[i] = batch_line(lines[i], numbers[i]);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(lines.size(), 1))));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::size_t ci = 0, not_ci = 0, unknown = 0, errors = 0;
    for (const auto& s : out) {
        std::cout << s << "\n";
        const auto j = Json::parse(s);
        if (j.contains("error")) {
            ++errors;
            continue;
        }
        const auto v = j["ci"].get<std::string>();
        (v == "ci" ? ci : v == "not_ci" ? not_ci : unknown)++;
    }
    std::cout << Json{{"summary", {{"records", out.size()}, {"ci", ci}, {"not_ci", not_ci}, {"unknown", unknown}, {"errors", errors}}}}
                     .dump()
              << "\n";
    return kExitOk;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("NSALG_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flatness, rectangles and complete intersections of numerical semigroup algebras", "nsalg"};
    app.footer(kFooter);
    app.require_subcommand(1);

    SpecOptions classify_opts, apery_opts, flat_opts, rect_opts, oracle_opts;
    auto* classify = app.add_subcommand("classify", "full report and complete intersection verdict");
    classify_opts.attach(classify);
    auto* apery = app.add_subcommand("apery", "Apery set and minimal monomials");
    apery_opts.attach(apery);
    auto* flat = app.add_subcommand("flat", "flatness verdict with witness");
    flat_opts.attach(flat);
    auto* rect = app.add_subcommand("rectangle", "rectangles and their matrices");
    rect_opts.attach(rect);
    auto* oracle = app.add_subcommand("oracle", "cross-check against brute-force reference implementations");
    oracle_opts.attach(oracle);

    std::string filter;
    bool fixtures_json = false;
    auto* fixtures = app.add_subcommand("fixtures", "run the embedded worked examples");
    fixtures->add_option("--filter", filter, "only labels containing this substring");
    fixtures->add_flag("--json", fixtures_json, "emit JSON");

    std::string corpus = "-";
    unsigned jobs = default_jobs();
    auto* batch = app.add_subcommand("batch", "classify line-delimited JSON specs");
    batch->add_option("corpus", corpus, "corpus file, '-' for stdin");
    batch->add_option("-j,--jobs", jobs, "worker threads (default $NSALG_JOBS or 1)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*classify) return cmd_classify(classify_opts);
        if (*apery) return cmd_apery(apery_opts);
        if (*flat) return cmd_flat(flat_opts);
        if (*rect) return cmd_rectangle(rect_opts);
        if (*oracle) return cmd_oracle(oracle_opts);
        if (*fixtures) return cmd_fixtures(filter, fixtures_json);
        if (*batch) return cmd_batch(corpus, jobs);
    } catch (const nsalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == nsalg::ErrorCode::InternalInconsistency ? kExitFailure : kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
