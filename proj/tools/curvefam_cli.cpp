/*
   Copyright 2026 The curvefam authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "curvefam/jsonio.hpp"

namespace {

using namespace curvefam;

constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitDepthCap = 4;

struct Options {
    std::string input;
    std::string output;
    std::string format = "json";
    int depth_cap = kDefaultDepthCap;
    long long alpha = 0;
    long long beta = -2;
    long long nu = 1;
    long long rho = 0;
};

unsigned seed_from_env() {
    const char* s = std::getenv("CURVEFAM_SEED");
    return s ? (unsigned)std::strtoul(s, nullptr, 10) : 0u;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(opt.output);
    if (!out)
        throw error("cannot open output file: " + opt.output);
    out << text << "\n";
}

NSLattice lattice_for(const JobInput& job, const Options& opt) {
    if (job.basepoints)
        return lattice_from_locus(*job.basepoints, job.map.degree());
    return analyze_surface(job.map, opt.depth_cap);
}

int run_analyze(const Options& opt) {
    JobInput job = load_job_file(opt.input);
    NSLattice lat = lattice_for(job, opt);
    if (opt.format == "text") {
        emit(opt, lattice_to_text(lat));
    } else {
        ordered_json j;
        j["surface"] = lattice_to_json(lat);
        emit(opt, j.dump(2));
    }
    return 0;
}

int run_classes(const Options& opt) {
    JobInput job = load_job_file(opt.input);
    NSLattice lat = lattice_for(job, opt);
    EnumQuery q{lat.h, opt.alpha, opt.beta};
    std::vector<DivClass> classes = enumerate_classes(q);
    if (opt.format == "text") {
        std::ostringstream out;
        out << "h = " << lat.h.to_string() << "\n";
        out << "classes with degree " << opt.alpha << ", self-intersection " << opt.beta << " ("
            << classes.size() << "):\n";
        for (const auto& c : classes)
            out << "  " << c.to_string() << "\n";
        emit(opt, out.str());
    } else {
        ordered_json j;
        j["query"] = {{"h", divclass_to_json(lat.h)}, {"alpha", opt.alpha}, {"beta", opt.beta}};
        ordered_json arr = ordered_json::array();
        for (const auto& c : classes)
            arr.push_back(divclass_to_json(c));
        j["classes"] = std::move(arr);
        emit(opt, j.dump(2));
    }
    return 0;
}

int run_families(const Options& opt) {
    JobInput job = load_job_file(opt.input);
    FamilyQuery q{opt.alpha, opt.nu, opt.rho};
    FamilySearch s =
        find_families(job.map, q, opt.depth_cap, false, seed_from_env(), job.basepoints);
    emit(opt, opt.format == "text" ? search_to_text(s) : search_to_json(s).dump(2));
    return 0;
}

int run_circles(const Options& opt) {
    JobInput job = load_job_file(opt.input);
    FamilySearch s = find_circles(job.map, opt.nu, opt.depth_cap, seed_from_env(), job.basepoints);
    emit(opt, opt.format == "text" ? search_to_text(s) : search_to_json(s).dump(2));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"curves and complete families of curves on rational surfaces"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-i,--input", opt.input, "job file (JSON)")->required();
        cmd->add_option("-o,--output", opt.output, "output file (default stdout)");
        cmd->add_option("--format", opt.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--depth-cap", opt.depth_cap, "basepoint recursion depth cap");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "basepoints and lattice of the surface");
    add_common(analyze);

    CLI::App* classes = app.add_subcommand("classes", "divisor classes of given degree and self-intersection");
    add_common(classes);
    classes->add_option("--alpha", opt.alpha, "degree")->required();
    classes->add_option("--beta", opt.beta, "self-intersection")->required();

    CLI::App* families = app.add_subcommand("families", "complete irreducible families");
    add_common(families);
    families->add_option("--alpha", opt.alpha, "degree")->required();
    families->add_option("--nu", opt.nu, "h^0 target (dimension + 1)")->required();
    families->add_option("--rho", opt.rho, "genus")->required();

    CLI::App* circles = app.add_subcommand("circles", "circles through the stereographic embedding");
    add_common(circles);
    circles->add_option("--nu", opt.nu, "h^0 target (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (app.got_subcommand(analyze))
            return run_analyze(opt);
        if (app.got_subcommand(classes))
            return run_classes(opt);
        if (app.got_subcommand(families))
            return run_families(opt);
        if (app.got_subcommand(circles))
            return run_circles(opt);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const depth_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDepthCap;
    } catch (const unsupported_field_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const unsupported_class_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
