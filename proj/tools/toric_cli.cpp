// Command-line front end: reads an instance file, runs one command, prints
// a human report or machine-readable JSON.
//
// Exit codes: 0 success, 2 parse/validation error, 3 computation error
// (for instance precision exhausted), 4 oracle disagreement.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "toric/execute.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "toric: exact degrees, Chow weights, normalized heights and "
      "multiheights, monomial Bezout intersections, and orbit point heights "
      "of projective toric varieties from combinatorial data"};

  std::string input;
  std::string command;
  toric::ExecOptions opts;
  bool machine = false;
  bool normalized_mode = false;
  bool waive_pf = false;

  app.add_option("--input", input, "instance file (JSON)")->required();
  app.add_option("--command", command,
                 "one of: degree, chow-weight, height, multiheight, "
                 "mixed-integral, bezout, envelope, check, oracle, "
                 "minima-report")
      ->required();
  app.add_option("--precision", opts.digits, "decimal digits in reports");
  app.add_option("--seed", opts.seed, "oracle RNG seed");
  app.add_option("--samples", opts.samples, "oracle sample count");
  app.add_flag("--normalized-mode", normalized_mode,
               "divide volumes by the lattice index instead of requiring "
               "L_A = Z^n");
  app.add_flag("--waive-product-formula", waive_pf,
               "continue with a warning when supplied weights violate the "
               "product formula");
  app.add_flag("--machine", machine, "print machine-readable JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "error: cannot open '" << input << "'\n";
      return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    std::string text = buffer.str();
    toric::Instance inst = [&] {
      if (!normalized_mode && !waive_pf) return toric::parse_instance(text);
      // Flags merge into the instance options before validation reruns.
      auto patched = nlohmann::json::parse(text);
      if (!patched.contains("options")) patched["options"] = nlohmann::json::object();
      if (normalized_mode) patched["options"]["normalized_mode"] = true;
      if (waive_pf) patched["options"]["waive_product_formula"] = true;
      return toric::parse_instance(patched.dump());
    }();

    const toric::ExecutionResult result = toric::execute(command, inst, opts);
    if (machine)
      std::cout << result.machine.dump(2) << "\n";
    else
      std::cout << result.human;
    return result.exit_code;
  } catch (const toric::PrecisionExhausted& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 3;
  } catch (const toric::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const toric::ComputationError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
