#include "statespace/classification.hpp"
#include "statespace/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using statespace::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("cannot parse '" + path + "': " + e.what());
    }
}

statespace::LoadedPolytope load_polytope(const std::string& path) {
    try {
        return statespace::polytope_from_json(read_json_file(path));
    } catch (const std::invalid_argument& e) {
        throw ParseError("invalid polytope '" + path + "': " + e.what());
    }
}

void emit(const Json& report, const std::string& format) {
    if (format == "text") {
        std::cout << statespace::render_text(report);
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

// Generator specs: simplex(n), cube(n), cross_polytope(n),
// affinely_regular_polygon(m), prism(<2d spec>), random(n,count,seed).
statespace::VPolytope parse_generator_spec(const std::string& spec) {
    const auto open = spec.find('(');
    if (open == std::string::npos || spec.back() != ')') {
        throw ParseError("bad generator spec '" + spec + "'");
    }
    const std::string name = spec.substr(0, open);
    const std::string args = spec.substr(open + 1, spec.size() - open - 2);
    const auto split_args = [&]() {
        std::vector<long> values;
        std::size_t start = 0;
        while (start <= args.size() && !args.empty()) {
            const auto comma = args.find(',', start);
            const std::string token =
                args.substr(start, comma == std::string::npos ? std::string::npos
                                                              : comma - start);
            try {
                values.push_back(std::stol(token));
            } catch (...) {
                throw ParseError("bad generator argument '" + token + "'");
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return values;
    };
    try {
        if (name == "prism") {
            // prism(<2d spec>) or prism(<2d spec>, <height>); commas inside
            // the nested spec are protected by their parentheses.
            int depth = 0;
            std::size_t split = std::string::npos;
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (args[i] == '(') ++depth;
                if (args[i] == ')') --depth;
                if (args[i] == ',' && depth == 0) split = i;
            }
            if (split == std::string::npos) {
                return statespace::make_prism(parse_generator_spec(args));
            }
            std::string height = args.substr(split + 1);
            height.erase(0, height.find_first_not_of(' '));
            return statespace::make_prism(parse_generator_spec(args.substr(0, split)),
                                          statespace::parse_decimal_or_rational(height));
        }
        const auto values = split_args();
        if (name == "simplex" && values.size() == 1) {
            return statespace::make_simplex(values[0]);
        }
        if (name == "cube" && values.size() == 1) {
            return statespace::make_cube(values[0]);
        }
        if (name == "cross_polytope" && values.size() == 1) {
            return statespace::make_cross_polytope(values[0]);
        }
        if (name == "affinely_regular_polygon" && values.size() == 1) {
            return statespace::make_affinely_regular_polygon(values[0]);
        }
        if (name == "random" && values.size() == 3) {
            return statespace::make_random_polytope(values[0], values[1], values[2]);
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown generator spec '" + spec + "'");
}

std::vector<statespace::ModelPoint> parse_model_points(const std::string& text) {
    std::vector<statespace::ModelPoint> points;
    std::size_t start = 0;
    while (start < text.size()) {
        auto semi = text.find(';', start);
        if (semi == std::string::npos) semi = text.size();
        const std::string token = text.substr(start, semi - start);
        statespace::Vec coords;
        std::size_t cstart = 0;
        while (cstart <= token.size()) {
            auto comma = token.find(',', cstart);
            if (comma == std::string::npos) comma = token.size();
            try {
                coords.push_back(statespace::parse_decimal_or_rational(
                    token.substr(cstart, comma - cstart)));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
            if (comma == token.size()) break;
            cstart = comma + 1;
        }
        points.push_back(statespace::ModelPoint::of_exact(std::move(coords)));
        start = semi + 1;
    }
    if (points.empty()) throw ParseError("no model points given");
    return points;
}

Json model_term_to_json(const statespace::ModelTerm& term) {
    Json out;
    out["point"] = term.point;
    out["weight"] = term.weight;
    out["exact_weight"] =
        term.exact_weight ? Json(statespace::to_string(*term.exact_weight)) : Json(nullptr);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact convex-geometry toolkit: distinguishability, symmetry, "
                 "and state-space classification"};
    app.require_subcommand(1);

    std::string format = "json";
    std::uint64_t seed = 12021;
    std::size_t trials = 100;

    std::string analyze_file;
    auto* analyze = app.add_subcommand("analyze", "Full analysis of a polytope file");
    analyze->add_option("file", analyze_file)->required();
    analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    analyze->add_option("--seed", seed);
    analyze->add_option("--trials", trials);

    std::string distinguish_file, distinguish_points;
    auto* distinguish_cmd =
        app.add_subcommand("distinguish", "Distinguishability certificate for points");
    distinguish_cmd->add_option("file", distinguish_file)->required();
    distinguish_cmd->add_option("--points", distinguish_points)->required();
    distinguish_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    std::string decompose_file, decompose_point;
    bool decompose_exhaustive = false;
    auto* decompose_cmd =
        app.add_subcommand("decompose", "Decompose a point over distinguishable vertices");
    decompose_cmd->add_option("file", decompose_file)->required();
    decompose_cmd->add_option("--point", decompose_point)->required();
    decompose_cmd->add_flag("--all", decompose_exhaustive, "List every decomposition");
    decompose_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    std::string gen_spec, gen_output;
    auto* gen = app.add_subcommand("gen", "Generate a polytope file");
    gen->add_option("spec", gen_spec)->required();
    gen->add_option("-o,--output", gen_output)->required();

    std::string corpus_choice = "default";
    auto* verify =
        app.add_subcommand("verify", "Run the classification suite over the corpus");
    verify->add_option("--corpus", corpus_choice);
    verify->add_option("--seed", seed);
    verify->add_option("--trials", trials);
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* model = app.add_subcommand("model", "Analytic ball and cylinder models");
    model->require_subcommand(1);
    std::size_t ball_dim = 3;
    std::string model_points, model_point;
    auto* ball = model->add_subcommand("ball", "Unit ball model");
    ball->require_subcommand(1);
    auto* ball_report = ball->add_subcommand("report", "Characterization report");
    ball_report->add_option("--dim", ball_dim);
    ball_report->add_option("--seed", seed);
    ball_report->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    auto* ball_dist = ball->add_subcommand("distinguishable", "Test sphere points");
    ball_dist->add_option("--dim", ball_dim);
    ball_dist->add_option("--points", model_points)->required();
    auto* ball_dec = ball->add_subcommand("decompose", "Decompose a ball point");
    ball_dec->add_option("--dim", ball_dim);
    ball_dec->add_option("--point", model_point)->required();
    auto* cyl = model->add_subcommand("cylinder", "Canonical cylinder model");
    cyl->require_subcommand(1);
    auto* cyl_report = cyl->add_subcommand("report", "Characterization report");
    cyl_report->add_option("--seed", seed);
    cyl_report->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    auto* cyl_dist = cyl->add_subcommand("distinguishable", "Test extreme cylinder points");
    cyl_dist->add_option("--points", model_points)->required();
    auto* cyl_dec = cyl->add_subcommand("decompose", "Decompose a cylinder point");
    cyl_dec->add_option("--point", model_point)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    if (analyze->parsed()) {
        const auto loaded = load_polytope(analyze_file);
        emit(statespace::analyze_report(analyze_file, loaded, seed, trials), format);
        return kExitOk;
    }
    if (distinguish_cmd->parsed()) {
        const auto loaded = load_polytope(distinguish_file);
        Json points_json;
        try {
            points_json = Json::parse(distinguish_points);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad --points: ") + e.what());
        }
        std::vector<statespace::Point> points;
        for (const auto& entry : points_json) {
            points.push_back(statespace::vec_from_json(entry));
        }
        const auto witness = statespace::distinguishable(loaded.poly, points);
        Json out;
        out["report_version"] = 1;
        out["points"] = statespace::point_list_to_json(points);
        out["distinguishable"] = witness.has_value();
        if (witness) {
            out["witness"] = statespace::witness_to_json(*witness);
            if (points.size() >= 2) {
                const auto hw = statespace::hyperplane_witness_from_effects(
                    loaded.poly, points, *witness);
                Json hw_json = statespace::witness_to_json(hw);
                hw_json["verified"] =
                    statespace::verify_hyperplane_witness(loaded.poly, points, hw).ok;
                out["hyperplane_witness"] = std::move(hw_json);
            }
        }
        emit(out, format);
        return kExitOk;
    }
    if (decompose_cmd->parsed()) {
        const auto loaded = load_polytope(decompose_file);
        statespace::Point p;
        try {
            // Accept ["p","q"] and the wrapped form [["p"],["q"]].
            Json flat = Json::array();
            for (const auto& entry : Json::parse(decompose_point)) {
                if (entry.is_array()) {
                    for (const auto& inner : entry) flat.push_back(inner);
                } else {
                    flat.push_back(entry);
                }
            }
            p = statespace::vec_from_json(flat);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad --point: ") + e.what());
        }
        Json out;
        out["report_version"] = 1;
        out["point"] = statespace::vec_to_json(p);
        if (decompose_exhaustive) {
            Json list = Json::array();
            for (const auto& d : statespace::decompose_all(loaded.poly, p)) {
                list.push_back(statespace::decomposition_to_json(d));
            }
            out["decomposable"] = !list.empty();
            out["decompositions"] = std::move(list);
        } else {
            const auto d = statespace::decompose(loaded.poly, p);
            out["decomposable"] = d.has_value();
            out["decomposition"] =
                d ? statespace::decomposition_to_json(*d) : Json(nullptr);
        }
        emit(out, format);
        return kExitOk;
    }
    if (gen->parsed()) {
        const auto poly = parse_generator_spec(gen_spec);
        std::ofstream outfile(gen_output);
        if (!outfile) throw ParseError("cannot write '" + gen_output + "'");
        outfile << statespace::polytope_to_json(poly).dump(2) << "\n";
        return kExitOk;
    }
    if (verify->parsed()) {
        std::vector<statespace::CorpusItem> corpus;
        if (corpus_choice == "default") {
            corpus = statespace::default_corpus();
        } else {
            // A directory of polytope documents, loaded in name order.
            std::vector<std::filesystem::path> files;
            std::error_code ec;
            for (const auto& entry : std::filesystem::directory_iterator(corpus_choice, ec)) {
                if (entry.path().extension() == ".json") files.push_back(entry.path());
            }
            if (ec) throw ParseError("cannot read corpus directory '" + corpus_choice + "'");
            std::sort(files.begin(), files.end());
            for (const auto& file : files) {
                corpus.push_back({file.filename().string(),
                                  load_polytope(file.string()).poly});
            }
            if (corpus.empty()) {
                throw ParseError("no polytope files in '" + corpus_choice + "'");
            }
        }
        const Json report = statespace::verify_report(corpus, trials, seed);
        emit(report, format);
        return report["ok"].get<bool>() ? kExitOk : kExitViolation;
    }
    if (model->parsed()) {
        if (ball_report->parsed()) {
            emit(statespace::model_report(statespace::BallModel{ball_dim}, seed), format);
            return kExitOk;
        }
        if (cyl_report->parsed()) {
            emit(statespace::model_report(statespace::CylinderModel{}, seed), format);
            return kExitOk;
        }
        Json out;
        out["report_version"] = 1;
        if (ball_dist->parsed() || ball_dec->parsed()) {
            const statespace::BallModel m{ball_dim};
            if (ball_dist->parsed()) {
                const auto points = parse_model_points(model_points);
                out["distinguishable"] = statespace::ball_distinguishable(m, points);
            } else {
                const auto p = parse_model_points(model_point).front();
                const auto d = statespace::ball_decompose(m, p);
                Json terms = Json::array();
                for (const auto& t : d.terms) terms.push_back(model_term_to_json(t));
                out["decomposable"] = true;
                out["terms"] = std::move(terms);
            }
        } else {
            const statespace::CylinderModel m{};
            if (cyl_dist->parsed()) {
                const auto points = parse_model_points(model_points);
                out["distinguishable"] = statespace::cylinder_distinguishable(m, points);
            } else {
                const auto p = parse_model_points(model_point).front();
                const auto d = statespace::cylinder_decompose(m, p);
                out["decomposable"] = d.has_value();
                if (d) {
                    Json terms = Json::array();
                    for (const auto& t : d->terms) terms.push_back(model_term_to_json(t));
                    out["terms"] = std::move(terms);
                } else {
                    out["terms"] = nullptr;
                }
            }
        }
        emit(out, format);
        return kExitOk;
    }
    return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        const std::string message = e.what();
        std::cerr << "error: " << message << "\n";
        if (message.find("not full-dimensional") != std::string::npos ||
            message.find("empty point set") != std::string::npos) {
            return kExitDegenerate;
        }
        return kExitParse;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitViolation;
    }
}
