// Command-line driver: Newton algorithm at infinity, motivic invariants and
// bifurcation sets of a bivariate polynomial over Q.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "newton/parser.hpp"
#include "newton/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "Newton algorithm at infinity for plane curves: motivic Milnor fiber at "
        "infinity, nearby cycles, lambda invariants and bifurcation sets"};
    std::string input;
    newton::ReportOptions options;
    bool json = false;
    app.add_option("polynomial", input,
                   "polynomial in x and y over Q (reads stdin when omitted)");
    app.add_option("--value", options.extra_values,
                   "extra candidate value to evaluate lambda at (repeatable)");
    app.add_flag("--motives", options.include_motives, "include full motive pretty-prints");
    app.add_flag("--tree", options.include_tree, "include the Newton trees");
    app.add_option("--svg", options.svg_path, "write a polygon diagram to this SVG file");
    app.add_flag("--json", json, "emit the machine-readable JSON document");
    CLI11_PARSE(app, argc, argv);

    if (input.empty()) {
        std::getline(std::cin, input);
        if (input.empty()) {
            std::cerr << "error: no polynomial given\n";
            return 2;
        }
    }
    try {
        newton::LaurentPoly f = newton::parse_polynomial(input);
        newton::Report report = newton::run_report(f, options);
        std::cout << (json ? report.json : report.text);
        return 0;
    } catch (const newton::parse_error& e) {
        std::cerr << "parse error at offset " << e.offset << ": " << e.what() << "\n";
        return 2;
    } catch (const newton::precondition_error& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 3;
    } catch (const newton::consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 4;
    }
}
