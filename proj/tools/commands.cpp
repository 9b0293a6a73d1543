#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "zeroheavy/cantor.hpp"
#include "zeroheavy/digits.hpp"
#include "zeroheavy/errors.hpp"
#include "zeroheavy/expr.hpp"
#include "zeroheavy/hausdorff.hpp"
#include "zeroheavy/serialize.hpp"
#include "zeroheavy/zigzag.hpp"

namespace zhcli {

namespace zh = zeroheavy;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

zh::Interval parse_interval(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw zh::ParseError("interval must be written lo,hi");
  zh::Rational lo = zh::parse_rational(parts[0]), hi = zh::parse_rational(parts[1]);
  if (!(lo < hi)) throw zh::ParseError("interval needs lo < hi");
  return zh::Interval(lo, hi);
}

std::vector<unsigned> parse_bases(const std::string& text) {
  std::vector<unsigned> out;
  for (const auto& p : split(text, ',')) {
    zh::Rational b = zh::parse_rational(p);
    if (b.get_den() != 1 || b < 2 || b > 1u << 16) throw zh::ParseError("base must be an integer >= 2: " + p);
    out.push_back(static_cast<unsigned>(b.get_num().get_ui()));
  }
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw zh::Error("cannot write " + path.string());
  f << content;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw zh::ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

int finish(const zh::ConstructionResult& r) {
  std::cout << "status: " << zh::to_string(r.status);
  if (!r.message.empty()) std::cout << " (" << r.message << ")";
  std::cout << "\niterations: " << r.iterations << "\n";
  for (const auto& c : r.certificates) {
    std::cout << "certificate " << c.label << " base " << c.base << ": " << c.certificate.checkpoints.size()
              << " checkpoints, prefix " << c.prefix.size() << " digits, " << (c.valid ? "valid" : "INVALID") << "\n";
  }
  if (r.status != zh::RunStatus::Complete) return kBudget;
  return r.all_valid() ? kOk : kInvariant;
}

std::string decimal(const zh::Rational& q) { return zh::to_decimal(q, 12); }

}  // namespace

int cmd_construct(const ConstructConfig& c) {
  zh::FunctionSpec f = zh::parse(c.function);
  zh::Interval I = parse_interval(c.interval);
  zh::ConstructionLimits limits;
  limits.max_digits = c.max_digits;
  zh::ConstructionResult r = zh::run_single(f, I, c.base, c.digits, c.steps, limits);

  fs::path out(c.out);
  if (!r.x_prefixes.empty()) {
    write_file(out / "x.digits", zh::format_digit_file(r.x_prefix()));
    for (const auto& cert : r.certificates) {
      if (cert.k == 1) write_file(out / "y.digits", zh::format_digit_file(cert.prefix));
    }
  }
  write_file(out / "certificates.json", zh::certificates_json(r));
  write_file(out / "transcript.jsonl", zh::transcript_jsonl(r.transcript));
  return finish(r);
}

int cmd_family(const FamilyConfig& c) {
  std::vector<zh::FunctionSpec> fns;
  for (const auto& s : c.functions) fns.push_back(zh::parse(s));
  if (!c.generator.empty()) {
    if (c.q_list.empty()) throw zh::ParseError("--gen needs --q-list");
    for (const auto& q : split(c.q_list, ',')) {
      zh::Rational value = zh::parse_rational(q);
      std::string text;
      for (char ch : c.generator) {
        if (ch == 'q') text += "(" + zh::to_string(value) + ")";
        else text.push_back(ch);
      }
      fns.push_back(zh::parse(text));
    }
  }
  if (fns.empty()) throw zh::ParseError("family needs at least one --f or a --gen rule");
  std::vector<unsigned> bases = c.bases.empty() ? std::vector<unsigned>{c.base} : parse_bases(c.bases);
  zh::ConstructionLimits limits;
  limits.max_digits = c.max_digits;
  zh::ConstructionResult r = zh::run_family_multibase(fns, parse_interval(c.interval), bases, c.steps, limits);

  fs::path out(c.out);
  const bool multi = bases.size() > 1;
  auto suffix = [&](unsigned b) { return multi ? ".b" + std::to_string(b) : std::string(); };
  std::vector<std::pair<fs::path, std::string>> files;
  for (const auto& p : r.x_prefixes) files.emplace_back(out / ("x" + suffix(p.base) + ".digits"), zh::format_digit_file(p));
  for (const auto& cert : r.certificates) {
    files.emplace_back(out / ("y" + std::to_string(cert.k) + suffix(cert.base) + ".digits"),
                       zh::format_digit_file(cert.prefix));
  }
  for (const auto& [path, text] : files) write_file(path, text);
  write_file(out / "certificates.json", zh::certificates_json(r));
  write_file(out / "transcript.jsonl", zh::transcript_jsonl(r.transcript));

  // Independent re-validation of every emitted image file against its certificate.
  std::vector<char> ok(r.certificates.size(), 0);
  parallel_for(r.certificates.size(), c.jobs, [&](std::size_t i) {
    const auto& cert = r.certificates[i];
    fs::path p = out / ("y" + std::to_string(cert.k) + suffix(cert.base) + ".digits");
    zh::DigitPrefix back = zh::parse_digit_file(read_file(p.string()));
    ok[i] = !cert.certificate.checkpoints.empty() && zh::validate_certificate(cert.certificate, back);
  });
  int code = finish(r);
  if (code == kOk && std::find(ok.begin(), ok.end(), 0) != ok.end()) return kInvariant;
  return code;
}

int cmd_cantor(const CantorConfig& c) {
  if (c.k < 1) throw zh::ParseError("--k must be at least 1");
  std::vector<zh::Rational> xs;
  if (!c.points.empty()) {
    for (const auto& p : split(c.points, ',')) xs.push_back(zh::parse_rational(p));
  }
  if (c.grid > 0) {
    for (std::size_t i = 0; i <= c.grid; ++i) {
      xs.emplace_back(zh::make_rational(zh::Integer(static_cast<unsigned long>(i)), zh::Integer(static_cast<unsigned long>(c.grid))));
    }
  }
  if (c.ternary_depth > 0) {
    if (c.ternary_depth > 16) throw zh::ParseError("--ternary-depth is limited to 16");
    zh::Integer n = zh::ipow(3, c.ternary_depth);
    for (zh::Integer i = 0; i <= n; ++i) xs.emplace_back(zh::make_rational(i, n));
  }
  if (xs.empty()) throw zh::ParseError("cantor needs --grid, --ternary-depth or --points");
  if (c.format != "csv" && c.format != "json") throw zh::ParseError("--format must be csv or json");

  struct Row {
    std::string x, C, Cs, Ch;
    bool exact = false;
    std::string xd, Cd, Csd, Chd;
  };
  std::vector<Row> rows(xs.size());
  parallel_for(xs.size(), c.jobs, [&](std::size_t i) {
    const zh::Rational& x = xs[i];
    Row& r = rows[i];
    r.x = zh::to_string(x);
    r.xd = decimal(x);
    if (x >= 0 && x <= 1) {
      zh::Rational cv = zh::cantor_C(x).approximant, cs = zh::cantor_Cs(x).approximant;
      r.C = zh::to_string(cv);
      r.Cs = zh::to_string(cs);
      r.Cd = decimal(cv);
      r.Csd = decimal(cs);
    }
    zh::BinaryValue h = zh::c_hat_periodic(x, c.k);
    r.Ch = zh::to_string(h.approximant);
    r.Chd = decimal(h.approximant);
    r.exact = h.exact();
  });

  std::ostringstream os;
  if (c.format == "csv") {
    os << "x,C,C_s,Chat_k,Chat_exact,x_decimal,C_decimal,C_s_decimal,Chat_k_decimal\n";
    for (const auto& r : rows) {
      os << r.x << ',' << r.C << ',' << r.Cs << ',' << r.Ch << ',' << (r.exact ? 1 : 0) << ',' << r.xd << ',' << r.Cd
         << ',' << r.Csd << ',' << r.Chd << '\n';
    }
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      arr.push_back({{"x", r.x}, {"C", r.C}, {"C_s", r.Cs}, {"Chat_k", r.Ch}, {"k", c.k}, {"exact", r.exact}});
    }
    os << arr.dump(2) << '\n';
  }
  if (c.out.empty()) std::cout << os.str();
  else write_file(c.out, os.str());
  return kOk;
}

int cmd_analyze(const AnalyzeConfig& c) {
  zh::DigitPrefix prefix;
  if (!c.digits_file.empty()) {
    prefix = zh::parse_digit_file(read_file(c.digits_file));
  } else if (!c.rational.empty()) {
    zh::Rational q = zh::abs(zh::parse_rational(c.rational));
    q -= zh::Rational(zh::floor(q));
    prefix = zh::expand(q, c.base, c.depth);
  } else {
    throw zh::ParseError("analyze needs --digits-file or --rational");
  }
  const std::size_t n = prefix.size();
  if (n == 0) throw zh::ParseError("digit prefix is empty");

  std::vector<std::size_t> sample;
  for (std::size_t M = 1; M < n; M *= 2) sample.push_back(M);
  sample.push_back(n);

  std::size_t longest = 0, longest_end = 0, run = 0;
  for (std::size_t i = 0; i < n; ++i) {
    run = prefix.digits[i] == 0 ? run + 1 : 0;
    if (run > longest) {
      longest = run;
      longest_end = i + 1;
    }
  }
  // Greedy checkpoint sequence: the m-th checkpoint is the first L past the previous one
  // with zero frequency >= 1 - 1/m.
  std::vector<std::size_t> best;
  std::size_t zeros = 0, L = 0;
  for (std::size_t m = 1;; ++m) {
    zh::Rational bound = zh::Rational(1) - zh::Rational(1, static_cast<unsigned long>(m));
    bool found = false;
    while (L < n) {
      zeros += prefix.digits[L] == 0;
      ++L;
      if (zh::make_rational(zh::Integer(static_cast<unsigned long>(zeros)), zh::Integer(static_cast<unsigned long>(L))) >= bound) {
        found = true;
        break;
      }
    }
    if (!found) break;
    best.push_back(L);
  }

  int code = kOk;
  std::string cert_status;
  if (!c.certificates.empty()) {
    auto j = nlohmann::json::parse(read_file(c.certificates));
    cert_status = "label not found";
    code = kUsage;
    for (const auto& cj : j.at("certificates")) {
      if (cj.at("label").get<std::string>() != c.label) continue;
      if (cj.at("base").get<unsigned>() != prefix.base) {
        cert_status = "base mismatch";
        code = kInvariant;
        break;
      }
      bool same = true;
      for (const auto& cp : cj.at("checkpoints")) {
        std::size_t len = cp.at("length").get<std::size_t>();
        zh::Rational f = zh::parse_rational(cp.at("frequency").get<std::string>());
        same = same && len <= n && zh::lambda_freq(prefix, 0, len) == f;
      }
      cert_status = same ? "reproduced" : "MISMATCH";
      code = same ? kOk : kInvariant;
      break;
    }
  }

  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["base"] = prefix.base;
    j["length"] = n;
    j["exact"] = prefix.exact;
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (std::size_t M : sample) {
      nlohmann::ordered_json row;
      row["M"] = M;
      for (unsigned d = 0; d < std::min(prefix.base, 36u); ++d) {
        row["lambda_" + std::to_string(d)] = zh::to_string(zh::lambda_freq(prefix, d, M));
      }
      table.push_back(row);
    }
    j["frequencies"] = table;
    j["longest_zero_run"] = longest;
    j["longest_zero_run_end"] = longest_end;
    j["checkpoints"] = best;
    if (!cert_status.empty()) j["certificate"] = cert_status;
    std::cout << j.dump(2) << '\n';
    return code;
  }
  std::cout << "base " << prefix.base << ", " << n << " digits" << (prefix.exact ? " (exact)" : "") << "\n";
  std::cout << "M";
  const unsigned shown = std::min(prefix.base, 36u);
  for (unsigned d = 0; d < shown; ++d) std::cout << "\tL" << d;
  std::cout << "\n";
  for (std::size_t M : sample) {
    std::cout << M;
    for (unsigned d = 0; d < shown; ++d) std::cout << '\t' << zh::to_string(zh::lambda_freq(prefix, d, M));
    std::cout << "\n";
  }
  std::cout << "longest zero run: " << longest << " ending at " << longest_end << "\n";
  std::cout << "checkpoints (m-th with zero frequency >= 1 - 1/m):";
  for (std::size_t v : best) std::cout << ' ' << v;
  std::cout << "\n";
  if (!cert_status.empty()) std::cout << "certificate " << c.label << ": " << cert_status << "\n";
  return code;
}

int cmd_bound(const BoundConfig& c) {
  zh::Rational s = zh::parse_rational(c.s);
  if (s <= 0) throw zh::DomainError("--s must be positive");
  if (c.base < 2) throw zh::DomainError("--base must be at least 2");
  if (c.K < 1) throw zh::DomainError("--K must be at least 1");
  if (c.format != "csv" && c.format != "json") throw zh::ParseError("--format must be csv or json");
  zh::Rational eps = c.epsilon.empty() ? zh::epsilon_for_s(s, c.base).epsilon : zh::parse_rational(c.epsilon);
  zh::CoverBoundReport r = zh::cover_cost(c.base, s, eps, c.K, c.M_cap == 0 ? 2 * c.K : c.M_cap);
  if (!c.out.empty()) {
    write_file(fs::path(c.out) / "cover.csv", zh::cover_report_csv(r));
    write_file(fs::path(c.out) / "cover.json", zh::cover_report_json(r));
  }
  std::cout << (c.format == "csv" ? zh::cover_report_csv(r) : zh::cover_report_json(r));
  return r.epsilon_valid ? kOk : kUsage;
}

}  // namespace zhcli
