#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "zhegalkin/zhegalkin.hpp"

namespace zhegalkin::cli {

namespace {

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

double parse_real(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ContractError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::string format_matrix(const ModMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c != 0) out += ' ';
      out += std::to_string(m.at(r, c));
    }
    out += '\n';
  }
  return out;
}

std::string format_complex(const Complex& z) {
  return format_real(z.real()) + "," + format_real(z.imag());
}

QuditState parse_state(std::string_view text, std::size_t k) {
  if (text.find(',') == std::string_view::npos) {
    auto v = parse_real(text);
    if (v < 0 || v != std::floor(v)) throw ContractError("basis digit must be a non-negative integer");
    return QuditState::basis(k, static_cast<std::size_t>(v));
  }
  std::vector<Complex> amps;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    auto comma = token.find(',');
    if (comma == std::string::npos) throw ContractError("amplitude '" + token + "' is not re,im");
    amps.emplace_back(parse_real(std::string_view(token).substr(0, comma)),
                      parse_real(std::string_view(token).substr(comma + 1)));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ';' || ch == ' ' || ch == '\t') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return QuditState(std::move(amps));
}

struct Options {
  std::string file = "-";
  std::string from;
  std::string state;
  std::string format = "perm";
  std::string theta;
  std::int64_t k = 0;
  std::int64_t n = 0;
};

int cmd_anf(const Options& o, std::istream& in, std::ostream& out) {
  const auto table = parse_truth_table(read_input(o.file, in));
  const auto poly = anf_transform(table);
  std::vector<std::string> comments;
  for (std::size_t c = 0; c < poly.m(); ++c) {
    comments.push_back("y" + std::to_string(c + 1) + " = " + render(poly, c));
  }
  out << serialize(poly, comments);
  return kOk;
}

int cmd_table(const Options& o, std::istream& in, std::ostream& out) {
  out << serialize(inverse_transform(parse_polynomial(read_input(o.file, in))));
  return kOk;
}

int cmd_synth(const Options& o, std::istream& in, std::ostream& out) {
  std::string from = o.from;
  if (from.empty()) from = ends_with(o.file, ".tt") ? "tt" : "anf";
  const auto text = read_input(o.file, in);
  const auto poly = from == "tt" ? anf_transform(parse_truth_table(text)) : parse_polynomial(text);
  out << serialize(synthesize(poly));
  return kOk;
}

int cmd_sim(const Options& o, std::istream& in, std::ostream& out) {
  const auto circuit = parse_circuit(read_input(o.file, in));
  out << format_basis_state(simulate(circuit, parse_basis_state(o.state))) << "\n";
  return kOk;
}

int cmd_unitary(const Options& o, std::istream& in, std::ostream& out) {
  const auto u = build_unitary(parse_truth_table(read_input(o.file, in)));
  if (o.format == "dense") {
    out << format_dense(to_dense(u));
  } else {
    out << format_permutation(u);
  }
  return kOk;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out) {
  out << render_ascii(parse_circuit(read_input(o.file, in)));
  return kOk;
}

int cmd_rotate(const Options& o, std::ostream& out) {
  const Modulus k(o.k);
  const double theta = parse_angle(o.theta);
  if (o.state.empty()) {
    const auto u = rotate(k, theta);
    for (std::size_t r = 0; r < u.dim(); ++r) {
      for (std::size_t c = 0; c < u.dim(); ++c) {
        if (c != 0) out << ' ';
        out << format_complex(u.at(r, c));
      }
      out << '\n';
    }
    return kOk;
  }
  const auto result = apply_rotation(k, theta, parse_state(o.state, k.value()));
  for (const auto& a : result.amplitudes()) out << format_complex(a) << '\n';
  return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  out << count_functions(o.k, o.n).str() << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const auto table = parse_truth_table(read_input(o.file, in));
  bool all = true;
  auto report = [&](const char* name, bool ok) {
    out << name << (ok ? " PASS" : " FAIL") << '\n';
    all = all && ok;
  };

  const auto poly = anf_transform(table);
  report("anf-roundtrip", inverse_transform(poly) == table);

  bool oracle = true;
  for (std::uint64_t r = 0; r < table.rows() && oracle; ++r) {
    const auto x = assignment_at(table.modulus(), table.n(), r);
    const auto y = evaluate(poly, x);
    oracle = std::equal(y.begin(), y.end(), table.row(r).begin());
  }
  report("anf-oracle", oracle);

  const auto u = build_unitary(table);
  const auto km = u.block_size();
  bool applied = true;
  for (std::uint64_t r = 0; r < table.rows() && applied; ++r) {
    std::uint64_t fx = 0;
    for (Digit d : table.row(r)) fx = fx * table.k() + d;
    applied = u.apply(r * km) == r * km + fx;
  }
  report("unitary-apply", applied);

  if (table.k() == 2) {
    const auto circuit = synthesize(poly);
    report("circuit-table", table_of(circuit) == table);
    const auto perm = basis_permutation(circuit);
    report("circuit-unitary",
           std::equal(perm.begin(), perm.end(), u.permutation().begin(), u.permutation().end()));
  } else {
    out << "# circuit checks skipped: synthesis requires k = 2\n";
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  const auto pi_at = s.find("pi");
  if (pi_at == std::string::npos) return parse_real(s);

  std::string_view prefix = std::string_view(s).substr(0, pi_at);
  std::string_view suffix = std::string_view(s).substr(pi_at + 2);
  if (!prefix.empty() && prefix.back() == '*') prefix.remove_suffix(1);
  double coeff = 1.0;
  if (prefix == "-") {
    coeff = -1.0;
  } else if (!prefix.empty() && prefix != "+") {
    coeff = parse_real(prefix);
  }
  double denom = 1.0;
  if (!suffix.empty()) {
    if (suffix.front() != '/') throw ContractError("bad angle '" + std::string(text) + "'");
    denom = parse_real(suffix.substr(1));
  }
  return coeff * std::numbers::pi / denom;
}

std::string format_real(double v) {
  if (std::abs(v) < 5e-13) v = 0.0;
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, ptr);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Zhegalkin polynomials, reversible circuits and block unitaries for k-valued logic",
               "zhegalkin"};
  app.require_subcommand(1);
  Options o;

  auto* anf = app.add_subcommand("anf", "truth table (.tt) -> Zhegalkin coefficients (.anf)");
  anf->add_option("file", o.file, "input .tt file or - for stdin")->required();

  auto* table = app.add_subcommand("table", "coefficients (.anf) -> truth table (.tt)");
  table->add_option("file", o.file, "input .anf file or - for stdin");

  auto* synth = app.add_subcommand("synth", "binary .anf or .tt -> reversible circuit (.qc)");
  synth->add_option("file", o.file, "input file or - for stdin");
  synth->add_option("--from", o.from, "input format (default: by extension, stdin is anf)")
      ->check(CLI::IsMember({"tt", "anf"}));

  auto* sim = app.add_subcommand("sim", "simulate a circuit on one basis state");
  sim->add_option("file", o.file, "input .qc file or - for stdin")->required();
  sim->add_option("--state", o.state, "n+m bits, wire 1 first")->required();

  auto* unitary = app.add_subcommand("unitary", "block-diagonal unitary of a truth table");
  unitary->add_option("file", o.file, "input .tt file or - for stdin")->required();
  unitary->add_option("--format", o.format, "perm or dense")
      ->check(CLI::IsMember({"perm", "dense"}));

  auto* pmat = app.add_subcommand("pmat", "print P = Q^-1 mod k");
  pmat->add_option("--k", o.k, "prime modulus")->required();
  auto* qmat = app.add_subcommand("qmat", "print the power matrix Q");
  qmat->add_option("--k", o.k, "prime modulus")->required();

  auto* rot = app.add_subcommand("rotate", "exp(-i S theta) for a single qudit");
  rot->add_option("--k", o.k, "odd prime modulus")->required();
  rot->add_option("--theta", o.theta, "angle in radians, e.g. 1.0472 or pi/3")->required();
  rot->add_option("--state", o.state, "basis digit j, or amplitudes 're,im;re,im;...'");

  auto* verify = app.add_subcommand("verify", "cross-check ANF, circuit and unitary of a .tt");
  verify->add_option("file", o.file, "input .tt file or - for stdin")->required();

  auto* render_cmd = app.add_subcommand("render", "ASCII diagram of a .qc circuit");
  render_cmd->add_option("file", o.file, "input .qc file or - for stdin")->required();

  auto* count = app.add_subcommand("count", "number of k-valued functions of n arguments");
  count->add_option("--k", o.k, "prime modulus")->required();
  count->add_option("--n", o.n, "number of arguments")->required();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("zhegalkin");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (anf->parsed()) return cmd_anf(o, in, out);
    if (table->parsed()) return cmd_table(o, in, out);
    if (synth->parsed()) return cmd_synth(o, in, out);
    if (sim->parsed()) return cmd_sim(o, in, out);
    if (unitary->parsed()) return cmd_unitary(o, in, out);
    if (pmat->parsed()) {
      out << format_matrix(build_transform_pair(Modulus(o.k)).p);
      return kOk;
    }
    if (qmat->parsed()) {
      out << format_matrix(build_transform_pair(Modulus(o.k)).q);
      return kOk;
    }
    if (rot->parsed()) return cmd_rotate(o, out);
    if (verify->parsed()) return cmd_verify(o, in, out);
    if (render_cmd->parsed()) return cmd_render(o, in, out);
    if (count->parsed()) return cmd_count(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ParseError::Kind::kNonPrimeModulus ? kContract : kParse;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kContract;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kSizeGuard;
  }
  return kUsage;
}

}  // namespace zhegalkin::cli
