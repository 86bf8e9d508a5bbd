// Command-line front end: parse a JSON instance, run the requested
// construction, and emit a JSON report (optionally with an SVG figure).
//
// Exit codes separate three very different situations:
//   0  success, report written
//   2  the hypotheses fail for this input (refusal) — not an error
//   1  an internal certificate audit failed, which is a bug by definition
//   3  unusable input: bad arguments, malformed JSON, schema or dimension
//      mismatches, capacity and conditioning limits

#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "plankcover/contact.hpp"
#include "plankcover/cover.hpp"
#include "plankcover/errors.hpp"
#include "plankcover/io.hpp"
#include "plankcover/select.hpp"
#include "plankcover/svg.hpp"

namespace {

using plankcover::Json;

struct Options {
    std::string input;
    std::string out;  // empty = stdout
    std::string svg;  // empty = no figure
    double tol = 1e-9;
    long long seed = 0;
    bool seed_set = false;
};

struct CommandOutput {
    Json report;
    std::string figure;  // empty when the command drew nothing
};

using Handler = std::function<CommandOutput(const Json&, const Options&)>;

void write_sink(const Options& opt, const Json& envelope) {
    std::string text = envelope.dump(2);
    text += '\n';
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
        std::cerr << "cannot write output file: " << opt.out << "\n";
        return;
    }
    f << text;
}

int run(const std::string& name, const Options& opt, const Handler& handler) {
    Json envelope;
    envelope["command"] = name;
    int code = 0;
    try {
        Json input = plankcover::load_json_file(opt.input);
        auto result = handler(input, opt);
        if (!opt.svg.empty()) {
            if (result.figure.empty())
                throw plankcover::ArgumentError(name + " has no figure to draw");
            std::ofstream f(opt.svg, std::ios::binary);
            if (!f) throw plankcover::ArgumentError("cannot write figure file: " + opt.svg);
            f << result.figure;
        }
        envelope["status"] = "ok";
        envelope["tol"] = opt.tol;
        if (opt.seed_set) envelope["seed"] = opt.seed;
        envelope["report"] = std::move(result.report);
    } catch (const plankcover::RefusalError& e) {
        envelope["status"] = "refused";
        envelope["reason"] = e.reason_code;
        envelope["detail"] = e.what();
        code = 2;
    } catch (const plankcover::PreconditionError& e) {
        envelope["status"] = "refused";
        envelope["reason"] = "hypothesis-not-met";
        envelope["detail"] = e.what();
        code = 2;
    } catch (const plankcover::UnboundedError& e) {
        envelope["status"] = "refused";
        envelope["reason"] = "unbounded";
        envelope["detail"] = e.what();
        code = 2;
    } catch (const plankcover::AuditError& e) {
        envelope["status"] = "audit-failure";
        envelope["detail"] = e.what();
        code = 1;
    } catch (const nlohmann::json::exception& e) {
        envelope["status"] = "error";
        envelope["kind"] = "parse";
        envelope["detail"] = e.what();  // nlohmann includes the byte offset
        code = 3;
    } catch (const plankcover::Error& e) {
        envelope["status"] = "error";
        envelope["kind"] = "input";
        envelope["detail"] = e.what();
        code = 3;
    }
    write_sink(opt, envelope);
    if (code != 0) std::cerr << name << ": " << envelope["status"].get<std::string>() << " — "
                             << envelope["detail"].get<std::string>() << "\n";
    return code;
}

CommandOutput do_select_colourful(const Json& input, const Options&) {
    auto inst = plankcover::read_selection_instance(input);
    return {plankcover::selection_result_json(plankcover::select_colourful(inst)), {}};
}

CommandOutput do_select_bang(const Json& input, const Options&) {
    auto in = plankcover::read_bang_input(input);
    return {plankcover::bang_result_json(
                plankcover::select_bang(in.directions, in.widths, in.levels)),
            {}};
}

CommandOutput do_select_kadets(const Json& input, const Options&) {
    auto in = plankcover::read_kadets_input(input);
    return {plankcover::kadets_result_json(
                plankcover::select_kadets(in.menus, in.radii, in.centers)),
            {}};
}

CommandOutput do_inradius(const Json& input, const Options& opt) {
    auto in = plankcover::read_body_pair(input);
    auto h = plankcover::max_inscribed_homothet(in.C, in.B);
    CommandOutput out{plankcover::inscribed_json(h), {}};
    if (!opt.svg.empty()) {
        plankcover::ContactSystem bare{h.lambda, h.center, {}};
        out.figure = plankcover::svg_contact_scene(in.C, in.B, bare);
    }
    return out;
}

CommandOutput do_contact_pairs(const Json& input, const Options& opt) {
    auto in = plankcover::read_body_pair(input);
    auto sys = plankcover::extract_contact_pairs(in.C, in.B);
    CommandOutput out{plankcover::contact_system_json(sys), {}};
    if (!opt.svg.empty()) out.figure = plankcover::svg_contact_scene(in.C, in.B, sys);
    return out;
}

CommandOutput do_witness(const Json& input, const Options& opt) {
    auto in = plankcover::read_witness_input(input);
    auto rep = plankcover::construct_witness(in.instance, in.epsilon);
    CommandOutput out{plankcover::witness_report_json(rep), {}};
    if (!opt.svg.empty()) out.figure = plankcover::svg_witness_scene(in.instance, rep.witness);
    return out;
}

CommandOutput do_sumset(const Json& input, const Options& opt) {
    auto pieces = plankcover::read_sumset_input(input);
    auto rep = plankcover::sumset_witness(pieces);
    CommandOutput out{plankcover::sumset_report_json(rep), {}};
    if (!opt.svg.empty()) out.figure = plankcover::svg_sumset_scene(pieces, rep.witness);
    return out;
}

CommandOutput do_simplex_demo(const Json& input, const Options& opt) {
    auto in = plankcover::read_simplex_input(input);
    auto demo = plankcover::simplex_negative_homothet(in.dim, in.lambdas, in.shifts);
    CommandOutput out{plankcover::simplex_demo_json(demo), {}};
    if (!opt.svg.empty())
        out.figure = plankcover::svg_simplex_scene(demo, in.lambdas, in.shifts);
    return out;
}

CommandOutput do_verify_cover(const Json& input, const Options& opt) {
    auto in = plankcover::read_verify_input(input);
    auto sample = plankcover::verify_cover_sample(in.instance, in.grid, in.probe, opt.tol);
    CommandOutput out{plankcover::cover_sample_json(sample), {}};
    if (!opt.svg.empty()) {
        std::optional<plankcover::Vec> mark = in.probe;
        if (!mark && !sample.uncovered.empty()) mark = sample.uncovered.front();
        out.figure = plankcover::svg_witness_scene(in.instance, mark);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructive refutations for translative coverings"};
    app.require_subcommand(1);

    Options opt;
    int exit_code = 0;

    auto add_command = [&](const char* name, const char* help, Handler handler) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", opt.input, "JSON instance file")->required();
        sub->add_option("--tol", opt.tol, "membership tolerance for sampling checks")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", opt.seed, "seed echoed into the report")
            ->each([&](const std::string&) { opt.seed_set = true; });
        sub->add_option("--out", opt.out, "write the JSON report here instead of stdout");
        sub->add_option("--svg", opt.svg, "write a planar figure here (2D instances only)");
        sub->callback([&, name, handler] { exit_code = run(name, opt, handler); });
    };

    add_command("select-colourful", "one choice per class, margins certified",
                do_select_colourful);
    add_command("select-bang", "signed slab combination with cleared levels", do_select_bang);
    add_command("select-kadets", "direction per ball, combination outside all", do_select_kadets);
    add_command("inradius", "largest inscribed homothet of B inside C", do_inradius);
    add_command("contact-pairs", "inscribed homothet plus its certified contacts",
                do_contact_pairs);
    add_command("witness", "uncovered point for pieces of combined scale below one", do_witness);
    add_command("sumset-witness", "sum of projections avoided by every piece", do_sumset);
    add_command("simplex-demo", "negative homothets against the regular simplex",
                do_simplex_demo);
    add_command("verify-cover", "grid sample of how much of the body is covered",
                do_verify_cover);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }
    return exit_code;
}
