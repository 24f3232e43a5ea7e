// Command-line front end. Every subcommand is turned into a small session and
// run through the same executor as `run`.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ncontact/error.hpp"
#include "ncontact/session.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ncontact::InvalidArgument("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// --curve takes a session file holding a curve declaration, or the equation
// itself ("y^2 = x^3 - x").
std::string curve_equation(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    const auto s = ncontact::parse_session(read_file(arg));
    for (const auto& d : s.declarations)
      if (const auto* c = std::get_if<ncontact::CurveDecl>(&d)) return c->curve.to_string();
    throw ncontact::InvalidArgument("no curve declared in '" + arg + "'");
  }
  if (arg.find('=') == std::string::npos)
    throw ncontact::InvalidArgument("--curve expects a file or an equation 'y^2 = f(x)'");
  return arg;
}

int run_session(const std::string& text, bool machine) {
  const auto session = ncontact::parse_session(text);
  const auto result = ncontact::execute(session);
  for (const auto& r : result.reports) std::cout << (machine ? r.render_machine() : r.render_text());
  return result.exit_code == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-contact curves to plane cubics"};
  app.require_subcommand(1);
  app.fallthrough();
  bool machine = false;
  app.add_flag("--machine", machine, "key=value output");

  std::string curve, b, t_point, smooth_fix, form, orders, section, file;
  int n = 0, bound = 24;

  auto* contact = app.add_subcommand("contact", "build and verify an n-contact curve");
  contact->add_option("--curve", curve, "curve file or 'y^2 = f(x)'")->required();
  contact->add_option("--b", b, "b_d, a polynomial in x, y")->required();
  contact->add_option("--T", t_point, "torsion point \"(x,y)\"")->required();
  contact->add_option("--n", n, "torsion order")->required();
  contact->add_option("--smooth-fix", smooth_fix, "auto or a polynomial q");

  auto* torsion = app.add_subcommand("torsion", "order of a point");
  torsion->add_option("--curve", curve)->required();
  torsion->add_option("--point", t_point)->required();
  torsion->add_option("--bound", bound)->capture_default_str();

  auto* xi = app.add_subcommand("xi", "function with divisor n(T - O)");
  xi->add_option("--curve", curve)->required();
  xi->add_option("--T", t_point)->required();
  xi->add_option("--n", n)->required();

  auto* smooth = app.add_subcommand("smooth", "projective smoothness of a ternary form");
  smooth->add_option("--form", form, "form in X, Y, Z")->required();

  auto* zariski = app.add_subcommand("zariski", "splitting numbers and verdict");
  zariski->add_option("--n", n)->required();
  zariski->add_option("--orders", orders, "d1,d2,...")->required();

  auto* repro = app.add_subcommand("reproduce", "replay a worked example");
  repro->add_option("--section", section)->required();

  auto* run = app.add_subcommand("run", "execute a session file");
  run->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::ostringstream s;
    if (*contact) {
      s << "curve E: " << curve_equation(curve) << "\n";
      s << "point T on E = " << t_point << "\n";
      s << "poly b = " << b << "\n";
      std::string fix;
      if (!smooth_fix.empty()) {
        if (smooth_fix == "auto") {
          fix = " smooth-fix auto";
        } else {
          s << "poly q = " << smooth_fix << "\n";
          fix = " smooth-fix q";
        }
      }
      s << "contact b T " << n << fix << "\n";
    } else if (*torsion) {
      s << "curve E: " << curve_equation(curve) << "\npoint P on E = " << t_point << "\ntorsion P bound " << bound
        << "\n";
    } else if (*xi) {
      s << "curve E: " << curve_equation(curve) << "\npoint T on E = " << t_point << "\nxi T " << n << "\n";
    } else if (*smooth) {
      s << "form F = " << form << "\nsmooth F\n";
    } else if (*zariski) {
      s << "zariski " << n << " " << orders << "\n";
    } else if (*repro) {
      s << "reproduce " << section << "\n";
    } else {
      return run_session(read_file(file), machine);
    }
    return run_session(s.str(), machine);
  } catch (const ncontact::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
