// triality: command-line front end for the triality library.
//
// Every command writes a JSON-lines report: a header line (tool version,
// timestamp, worker count), deterministic body lines, and a footer line
// with the exit status and elapsed time.  Exit codes: 0 pass, 1 failure or
// counterexample, 2 usage error.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <triality/triality_all.hpp>

#ifndef TRIALITY_VERSION
#define TRIALITY_VERSION "unknown"
#endif

using json = nlohmann::json;
using namespace triality;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  int n = 3;
  std::string mode = "z4";
  std::uint64_t seed = 0;
  unsigned jobs = default_jobs();
  unsigned budget_bits = kDefaultBudgetBits;
  std::string out = "-";
  bool exhaustive = false;
  std::optional<std::uint64_t> samples;
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class Report {
 public:
  Report(const Globals& g, std::string command) : start_(std::chrono::steady_clock::now()) {
    if (g.out == "-") {
      os_ = &std::cout;
    } else {
      file_.open(g.out);
      if (!file_) throw UsageError("cannot open report file " + g.out);
      os_ = &file_;
    }
    json h;
    h["type"] = "header";
    h["tool"] = "triality";
    h["version"] = TRIALITY_VERSION;
    h["timestamp"] = utc_timestamp();
    h["command"] = std::move(command);
    h["jobs"] = g.jobs;
    write(h);
  }

  void write(const json& j) {
    *os_ << j.dump() << '\n';
    os_->flush();
  }

  void footer(int exit_code) {
    json f;
    f["type"] = "footer";
    f["status"] = exit_code == 0 ? "pass" : exit_code == 1 ? "fail" : "error";
    f["exit"] = exit_code;
    f["elapsed_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    write(f);
  }

 private:
  std::ostream* os_ = nullptr;
  std::ofstream file_;
  std::chrono::steady_clock::time_point start_;
};

CtxPtr make_ctx(const Globals& g) { return GroupCtx::create(g.n, parse_mode(g.mode)); }

Scope scope_of(const Globals& g, std::uint64_t default_samples) {
  if (g.exhaustive) return Scope::all();
  return Scope::sampled(g.samples.value_or(default_samples));
}

void require_rank3_finite(const Globals& g, const char* what) {
  if (g.n != 3 || parse_mode(g.mode) != Mode::FiniteZ4)
    throw UsageError(std::string(what) + " works on the finite rank-3 group only (--n 3 --mode z4)");
}

void print_counterexample(const json& ce) { std::cerr << ce.dump() << '\n'; }

json loop_element_json(const LoopTable& t, std::size_t i) {
  json j;
  j["index"] = i;
  if (!t.labels().empty()) j["element"] = to_json(g3::to_element(static_cast<g3::Code>(t.label(i))));
  return j;
}

bool binary_format(const std::string& path, const std::string& format) {
  return format == "bin" || (format.empty() && path.size() > 4 && path.substr(path.size() - 4) == ".bin");
}

LoopTable load_table(const std::string& path, const std::string& format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open table " + path);
  const bool bin = binary_format(path, format);
  // identity checks must be able to report on tables that are not loops
  return bin ? read_binary(in, LoopTable::Check::none) : read_csv(in, LoopTable::Check::none);
}

void save_table(const LoopTable& t, const std::string& path, const std::string& format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + path + " for writing");
  if (binary_format(path, format))
    write_binary(out, t);
  else
    write_csv(out, t);
}

// ---------------------------------------------------------------- reports

template <class R>
json identity_line(const R& r, const std::string& target, std::uint64_t seed) {
  json j;
  j["type"] = "check";
  j["target"] = target;
  j["law"] = r.name;
  j["arity"] = r.arity;
  j["scope"] = r.exhaustive ? "exhaustive" : "samples";
  j["seed"] = seed;
  j["checked"] = r.checked;
  j["passed"] = r.passed();
  return j;
}

int emit_element_reports(Report& rep, const std::vector<ElementReport>& rs, const std::string& target,
                         const Globals& g) {
  int code = 0;
  for (const auto& r : rs) {
    json j = identity_line(r, target, g.seed);
    j["n"] = g.n;
    j["mode"] = g.mode;
    if (r.counterexample) {
      json ce = json::array();
      for (const auto& e : *r.counterexample) ce.push_back(to_json(e));
      j["counterexample"] = ce;
      print_counterexample(ce);
      code = 1;
    }
    rep.write(j);
  }
  return code;
}

int emit_loop_reports(Report& rep, const std::vector<IdentityReport>& rs, const LoopTable& t,
                      const std::string& target, std::uint64_t seed) {
  int code = 0;
  for (const auto& r : rs) {
    json j = identity_line(r, target, seed);
    if (r.counterexample) {
      json ce = json::array();
      for (auto i : *r.counterexample) ce.push_back(loop_element_json(t, i));
      j["counterexample"] = ce;
      print_counterexample(ce);
      code = 1;
    }
    rep.write(j);
  }
  return code;
}

// ---------------------------------------------------------------- commands

int cmd_construct(const Globals& g) {
  auto ctx = make_ctx(g);
  Report rep(g, "construct");
  json j;
  j["type"] = "group";
  j["n"] = ctx->n();
  j["mode"] = mode_name(ctx->mode());
  j["zsize"] = ctx->zsize();
  j["m"] = ctx->m();
  if (ctx->finite()) j["order_log2"] = ctx->order_bits();
  json zl = json::array();
  for (int i = 1; i <= ctx->n(); ++i) zl.push_back("a" + std::to_string(i));
  for (int i = 1; i <= ctx->n(); ++i) zl.push_back("b" + std::to_string(i));
  j["zpart"] = zl;
  json fl = json::array();
  for (std::size_t k = 0; k < ctx->m(); ++k) fl.push_back(ctx->fsymbol(k));
  j["fpart"] = fl;
  j["dump_record_bytes"] = ctx->finite() ? json(dump_record_bytes(*ctx)) : json(nullptr);
  rep.write(j);
  rep.footer(0);
  return 0;
}

int verify_moufang(Report& rep, const Globals& g, const LoopTable& t, const std::string& which) {
  const Scope s = scope_of(g, 10'000'000);
  std::vector<MoufangIdentity> ws;
  if (which == "all")
    ws = {MoufangIdentity::left, MoufangIdentity::right, MoufangIdentity::middle};
  else
    ws = {parse_moufang(which)};
  std::vector<IdentityReport> rs;
  for (std::size_t k = 0; k < ws.size(); ++k) rs.push_back(check_moufang(t, ws[k], s, g.seed + k, g.jobs));
  return emit_loop_reports(rep, rs, t, "moufang", g.seed);
}

int verify_variety(Report& rep, const Globals& g, const LoopTable& t) {
  VarietyScope vs;
  vs.exhaustive_arity = g.exhaustive ? 3 : 2;
  vs.samples = g.samples.value_or(10'000'000);
  auto rs = check_variety_E(t, vs, g.seed, g.jobs);
  auto ex = check_expansion_laws(t, vs, g.seed + 100, g.jobs);
  rs.insert(rs.end(), ex.begin(), ex.end());
  return emit_loop_reports(rep, rs, t, "variety-E", g.seed);
}

json sweep_row_json(const SweepRow& r) {
  json j;
  j["type"] = "codeloop";
  j["lambda"] = r.lambda.to_string();
  j["subspace_basis"] = r.T.to_string();
  j["order"] = r.order;
  j["well_defined"] = r.well_defined;
  j["moufang"] = r.moufang;
  j["square_count"] = r.square_count;
  j["code_loop"] = r.code_loop();
  j["is_group"] = r.is_group;
  j["contains_associators"] = r.contains_associators;
  j["variety_E"] = r.variety_e;
  j["expansion_laws"] = r.expansion_laws;
  j["roundtrip"] = r.roundtrip;
  j["ok"] = r.ok();
  return j;
}

void write_sweep_csv(const SweepResult& res, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open " + path + " for writing");
  out << "lambda,subspace_basis,order,is_group,contains_associators,moufang,square_count,code_loop,ok\n";
  for (const auto& r : res.rows)
    out << r.lambda.to_string() << ',' << r.T.to_string() << ',' << r.order << ',' << r.is_group << ','
        << r.contains_associators << ',' << r.moufang << ',' << r.square_count << ',' << r.code_loop() << ','
        << r.ok() << '\n';
}

int run_sweep(Report& rep, const Globals& g, const std::string& csv) {
  require_rank3_finite(g, "the code-loop sweep");
  const MLoop m = extract_m_set(g.budget_bits, g.jobs);
  const SweepResult res = codeloop_sweep(m, g.jobs);
  json s;
  s["type"] = "sweep";
  s["center_dim"] = res.basis.dim();
  s["basis"] = res.basis.names;
  s["associator_subloop_order"] = res.associator_subloop_order;
  s["associators"] = res.associators.to_string();
  s["subspaces"] = res.rows.size();
  s["groups"] = res.groups();
  s["ok"] = res.ok();
  if (!csv.empty()) write_sweep_csv(res, csv);
  rep.write(s);
  for (const auto& r : res.rows) rep.write(sweep_row_json(r));
  return res.ok() ? 0 : 1;
}

int cmd_verify(const Globals& g, const std::string& target, const std::string& identity, const std::string& csv) {
  Report rep(g, "verify " + target);
  int code = 0;
  if (target == "moufang" || target == "variety-E") {
    require_rank3_finite(g, "loop verification");
    const MLoop m = extract_m_set(g.budget_bits, g.jobs);
    code = target == "moufang" ? verify_moufang(rep, g, m.table, identity) : verify_variety(rep, g, m.table);
  } else if (target == "codeloop-sweep") {
    code = run_sweep(rep, g, csv);
  } else {
    Target t;
    if (target == "group-axioms")
      t = Target::group_axioms;
    else if (target == "triality")
      t = Target::triality;
    else if (target == "s3-orders")
      t = Target::s3_orders;
    else if (target == "automorphism")
      t = Target::automorphism;
    else
      throw UsageError("unknown verify target " + target);
    CampaignOptions o;
    o.scope = scope_of(g, 100'000);
    o.seed = g.seed;
    o.jobs = g.jobs;
    o.budget_bits = g.budget_bits;
    code = emit_element_reports(rep, run_element_campaign(make_ctx(g), t, o), target, g);
  }
  rep.footer(code);
  return code;
}

int cmd_oracle_normalize(const Globals& g, const std::string& word, const std::string& order) {
  auto ctx = make_ctx(g);
  const CollectionOrder ord = order == "rightmost" ? CollectionOrder::rightmost : CollectionOrder::leftmost;
  if (order != "leftmost" && order != "rightmost") throw UsageError("--order is leftmost or rightmost");
  Report rep(g, "oracle normalize");
  const Word w = Word::parse(word);
  const Element e = normalize(w, ctx, ord);
  json j;
  j["type"] = "normal_form";
  j["word"] = w.to_string();
  j["element"] = to_json(e);
  j["normal_form"] = e.to_string();
  rep.write(j);
  rep.footer(0);
  return 0;
}

int cmd_oracle_random(const Globals& g, std::size_t length, std::size_t count) {
  auto ctx = make_ctx(g);
  Report rep(g, "oracle random");
  for (std::size_t k = 0; k < count; ++k) {
    const Word w = random_word(*ctx, length, SplitMix64::stream(g.seed, k).next());
    json j;
    j["type"] = "word";
    j["seed"] = g.seed;
    j["index"] = k;
    j["word"] = w.to_string();
    j["element"] = to_json(normalize(w, ctx));
    rep.write(j);
  }
  rep.footer(0);
  return 0;
}

// normalize(w1 w2) against multiply(normalize(w1), normalize(w2)) under
// both collection strategies.
int cmd_oracle_check(const Globals& g, std::size_t max_length) {
  auto ctx = make_ctx(g);
  if (g.exhaustive) throw UsageError("the oracle check is sampled only");
  const std::uint64_t K = g.samples.value_or(100'000);
  if (K == 0) throw UsageError("a sampled check needs at least one sample");
  Report rep(g, "oracle check");
  const std::uint64_t chunks = (K + kElementChunk - 1) / kElementChunk;
  std::vector<std::optional<std::pair<std::uint64_t, std::pair<Word, Word>>>> bad(chunks);
  parallel_chunks(chunks, g.jobs, [&](std::size_t c) {
    SplitMix64 s = SplitMix64::stream(g.seed, c);
    const std::uint64_t end = std::min(K, (c + 1) * kElementChunk);
    for (std::uint64_t r = c * kElementChunk; r < end; ++r) {
      const Word w1 = random_word(*ctx, s.below(max_length + 1), s.next());
      const Word w2 = random_word(*ctx, s.below(max_length + 1), s.next());
      const Element prod = normalize(w1, ctx) * normalize(w2, ctx);
      const Word w = w1.concat(w2);
      if (normalize(w, ctx) != prod || normalize(w, ctx, CollectionOrder::rightmost) != prod) {
        bad[c] = std::make_pair(r, std::make_pair(w1, w2));
        return;
      }
    }
  });
  json j;
  j["type"] = "check";
  j["target"] = "oracle";
  j["law"] = "normalize(w1 w2) = normalize(w1) normalize(w2)";
  j["n"] = g.n;
  j["mode"] = g.mode;
  j["scope"] = "samples";
  j["seed"] = g.seed;
  j["max_length"] = max_length;
  int code = 0;
  j["checked"] = K;
  for (const auto& b : bad)
    if (b) {
      j["checked"] = b->first + 1;
      json ce;
      ce["w1"] = b->second.first.to_string();
      ce["w2"] = b->second.second.to_string();
      ce["product"] = to_json(normalize(b->second.first, ctx) * normalize(b->second.second, ctx));
      ce["normal_form"] = to_json(normalize(b->second.first.concat(b->second.second), ctx));
      j["counterexample"] = ce;
      print_counterexample(ce);
      code = 1;
      break;
    }
  j["passed"] = code == 0;
  rep.write(j);
  rep.footer(code);
  return code;
}

int cmd_embed(const Globals& g, const std::string& element) {
  const Element x = element_from_json(element);
  Report rep(g, "embed");
  const ProductElement P = embed(x);
  json comps;
  for (const auto& t : TripleSet(x.n())) comps[triple_key(t)] = to_json(P.component(t));
  json j;
  j["type"] = "embedding";
  j["element"] = to_json(x);
  j["components"] = comps;
  const bool round = reconstruct(P) == x;
  j["roundtrip"] = round;
  rep.write(j);
  rep.footer(round ? 0 : 1);
  return round ? 0 : 1;
}

int cmd_loop_extract(const Globals& g, const std::string& table, const std::string& format) {
  require_rank3_finite(g, "loop extraction");
  Report rep(g, "loop extract");
  const MLoop m = extract_m_set(g.budget_bits, g.jobs);
  json j;
  j["type"] = "loop";
  j["order"] = m.table.size();
  j["identity"] = 0;
  j["latin"] = m.table.is_latin();
  json gens = json::array();
  for (auto x : m.x) gens.push_back(loop_element_json(m.table, x));
  j["generators"] = gens;
  if (!table.empty()) {
    save_table(m.table, table, format);
    j["table"] = table;
    j["format"] = binary_format(table, format) ? "bin" : "csv";
  }
  rep.write(j);
  rep.footer(0);
  return 0;
}

int cmd_loop_verify(const Globals& g, const std::string& identity, const std::string& table,
                    const std::string& format) {
  Report rep(g, "loop verify");
  int code;
  if (!table.empty()) {
    const LoopTable t = load_table(table, format);
    code = verify_moufang(rep, g, t, identity);
  } else {
    require_rank3_finite(g, "loop verification");
    const MLoop m = extract_m_set(g.budget_bits, g.jobs);
    code = verify_moufang(rep, g, m.table, identity);
  }
  rep.footer(code);
  return code;
}

int cmd_loop_center(const Globals& g) {
  require_rank3_finite(g, "the loop centre");
  Report rep(g, "loop center");
  const MLoop m = extract_m_set(g.budget_bits, g.jobs);
  const std::vector<std::size_t> gens(m.x.begin(), m.x.end());
  const auto z = center(m.table);
  const auto nuc = nucleus(m.table);
  const CenterBasis B = center_basis(m.table, gens);
  json j;
  j["type"] = "center";
  j["order"] = m.table.size();
  j["center_order"] = z.size();
  j["nucleus_order"] = nuc.size();
  j["squares"] = squares(m.table).size();
  json basis = json::array();
  for (std::size_t k = 0; k < B.dim(); ++k) {
    json b = loop_element_json(m.table, B.elements[k]);
    b["name"] = B.names[k];
    basis.push_back(b);
  }
  j["basis"] = basis;
  j["independent"] = B.independent;
  j["all_central"] = B.all_central;
  j["span_order"] = B.span_size;
  j["span_is_center"] = B.span_is_center.value_or(false);
  rep.write(j);
  const int code = B.independent && B.all_central && B.span_is_center.value_or(false) ? 0 : 1;
  rep.footer(code);
  return code;
}

int cmd_loop_export(const Globals& g, const std::string& table, const std::string& format,
                    const std::string& labels) {
  require_rank3_finite(g, "loop export");
  if (table.empty()) throw UsageError("loop export needs --table");
  Report rep(g, "loop export");
  const MLoop m = extract_m_set(g.budget_bits, g.jobs);
  save_table(m.table, table, format);
  if (!labels.empty()) {
    std::ofstream out(labels);
    if (!out) throw UsageError("cannot open " + labels + " for writing");
    out << "index,code,element\n";
    for (std::size_t i = 0; i < m.table.size(); ++i)
      out << i << ',' << m.table.label(i) << ','
          << g3::to_element(static_cast<g3::Code>(m.table.label(i))).to_string() << '\n';
  }
  json j;
  j["type"] = "export";
  j["order"] = m.table.size();
  j["table"] = table;
  j["format"] = binary_format(table, format) ? "bin" : "csv";
  if (!labels.empty()) j["labels"] = labels;
  rep.write(j);
  rep.footer(0);
  return 0;
}

int cmd_loop_free(const Globals& g) {
  Report rep(g, "loop free");
  const MLoop m = extract_m_set(g.budget_bits, g.jobs);
  const EmbeddedFreeLoop f(m, g.n);
  const auto& a = f.audit();
  const auto un = static_cast<std::uint64_t>(g.n);
  const std::uint64_t expect_log2 = 2 * un + binomial(un, 2) + binomial(un, 3);
  json j;
  j["type"] = "free_loop";
  j["n"] = g.n;
  j["components"] = f.triples().size();
  j["order"] = f.size();
  j["expected_order_log2"] = expect_log2;
  j["central_part"] = a.central_part;
  j["central_part_is_subgroup"] = a.central_part_is_subgroup;
  j["cosets"] = a.coset_count;
  j["closed"] = a.closed();
  j["projections_onto"] = a.projections_onto();
  const bool ok = f.size() == (std::uint64_t{1} << expect_log2) && a.closed() && a.projections_onto();
  j["passed"] = ok;
  rep.write(j);
  rep.footer(ok ? 0 : 1);
  return ok ? 0 : 1;
}

json codeloop_json(const CodeLoop& q) {
  json j;
  j["type"] = "codeloop";
  j["order"] = q.size();
  j["subspace_basis"] = q.T.to_string();
  j["well_defined"] = q.well_defined;
  bool mouf = true;
  for (auto w : {MoufangIdentity::left, MoufangIdentity::right, MoufangIdentity::middle})
    mouf = mouf && check_moufang(q.table, w, Scope::all()).passed();
  j["moufang"] = mouf;
  j["square_count"] = squares(q.table).size();
  j["is_code_loop"] = is_code_loop(q.table);
  j["is_group"] = is_associative(q.table);
  j["characteristic_vector"] = characteristic_vector(q).to_string();
  return j;
}

int cmd_codeloop_quotient(const Globals& g, const std::string& lambda, const std::string& table,
                          const std::string& format) {
  require_rank3_finite(g, "code-loop quotients");
  if (lambda.empty()) throw UsageError("codeloop quotient needs --lambda");
  const CharacteristicVector lam = CharacteristicVector::parse(lambda);
  if (lam.n() != 3) throw UsageError("--lambda must have 7 entries for n = 3");
  if (lam.is_zero()) throw UsageError("--lambda must be nonzero");
  Report rep(g, "codeloop quotient");
  const MLoop m = extract_m_set(g.budget_bits, g.jobs);
  const std::vector<std::size_t> gens(m.x.begin(), m.x.end());
  const CenterBasis B = center_basis(m.table, gens);
  const CodeLoop q = pi_lambda(m.table, B, gens, lam);
  json j = codeloop_json(q);
  j["lambda"] = lam.to_string();
  if (!table.empty()) {
    save_table(q.table, table, format);
    j["table"] = table;
  }
  const bool ok = q.well_defined && j["is_code_loop"].get<bool>() && j["characteristic_vector"] == lam.to_string();
  rep.write(j);
  rep.footer(ok ? 0 : 1);
  return ok ? 0 : 1;
}

std::vector<std::size_t> parse_index_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    out.push_back(std::stoul(cell, &used));
    if (used != cell.size()) throw UsageError("bad index list '" + s + "'");
  }
  return out;
}

int cmd_codeloop_charvec(const Globals& g, const std::string& lambda, const std::string& table,
                         const std::string& format, const std::string& gens_s) {
  if (lambda.empty() == table.empty()) throw UsageError("codeloop charvec takes exactly one of --lambda, --table");
  if (!table.empty()) {
    if (gens_s.empty()) throw UsageError("--table needs --gens");
    const LoopTable t = load_table(table, format);
    if (!t.is_latin()) throw UsageError("table is not a loop");
    Report rep(g, "codeloop charvec");
    json j;
    j["type"] = "charvec";
    j["is_code_loop"] = is_code_loop(t);
    j["characteristic_vector"] = characteristic_vector(t, parse_index_list(gens_s)).to_string();
    rep.write(j);
    rep.footer(0);
    return 0;
  }
  return cmd_codeloop_quotient(g, lambda, "", "csv");
}

int cmd_export(const Globals& g, const std::string& dump, std::optional<std::uint64_t> limit) {
  auto ctx = make_ctx(g);
  if (dump.empty()) throw UsageError("export needs --dump");
  const ElementRange all = enumerate(ctx, g.budget_bits);
  const ElementRange r = limit ? all.slice(0, std::min(*limit, all.total())) : all;
  Report rep(g, "export");
  std::ofstream out(dump, std::ios::binary);
  if (!out) throw UsageError("cannot open " + dump + " for writing");
  std::uint64_t count = 0;
  for (const auto& e : r) {
    write_record(out, e);
    ++count;
  }
  json j;
  j["type"] = "dump";
  j["n"] = g.n;
  j["mode"] = g.mode;
  j["records"] = count;
  j["record_bytes"] = dump_record_bytes(*ctx);
  j["path"] = dump;
  rep.write(j);
  rep.footer(0);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groups with triality, their Moufang loops and code loops"};
  app.set_version_flag("--version", std::string(TRIALITY_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--n", g.n, "rank n >= 3")->capture_default_str();
  app.add_option("--mode", g.mode, "coefficient mode")->check(CLI::IsMember({"z4", "z"}))->capture_default_str();
  app.add_option("--seed", g.seed, "seed for sampled campaigns")->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads (default $TRIALITY_JOBS or hardware)")->capture_default_str();
  app.add_option("--budget-bits", g.budget_bits, "largest enumeration allowed, as log2 of its size")
      ->capture_default_str();
  app.add_option("--out", g.out, "report path, - for stdout")->capture_default_str();
  auto* exh = app.add_flag("--exhaustive", g.exhaustive, "check every element or tuple");
  auto* smp = app.add_option("--samples", g.samples, "number of seeded samples");
  exh->excludes(smp);

  std::string target, identity = "all", table, format, csv, word, order = "leftmost", element, lambda,
                      gens, labels, dump;
  std::size_t length = 8, count = 1;
  std::optional<std::uint64_t> limit;
  std::function<int()> action;

  auto* construct = app.add_subcommand("construct", "describe the group and its coordinate layout");
  construct->callback([&] { action = [&] { return cmd_construct(g); }; });

  auto* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("target", target, "campaign target")
      ->required()
      ->check(CLI::IsMember({"group-axioms", "triality", "s3-orders", "automorphism", "moufang", "variety-E",
                             "codeloop-sweep"}));
  verify->add_option("--identity", identity, "Moufang identity")
      ->check(CLI::IsMember({"left", "right", "middle", "all"}));
  verify->add_option("--csv", csv, "CSV summary for codeloop-sweep");
  verify->callback([&] { action = [&] { return cmd_verify(g, target, identity, csv); }; });

  auto* oracle = app.add_subcommand("oracle", "word collection");
  oracle->require_subcommand(1);
  auto* onorm = oracle->add_subcommand("normalize", "collect a word into normal form");
  onorm->add_option("word", word, "word such as \"a1 b2^-1 a3^2\"")->required();
  onorm->add_option("--order", order, "leftmost or rightmost")->capture_default_str();
  onorm->callback([&] { action = [&] { return cmd_oracle_normalize(g, word, order); }; });
  auto* orand = oracle->add_subcommand("random", "seeded random words and their normal forms");
  orand->add_option("--length", length, "letters per word")->capture_default_str();
  orand->add_option("--count", count, "number of words")->capture_default_str();
  orand->callback([&] { action = [&] { return cmd_oracle_random(g, length, count); }; });
  auto* ocheck = oracle->add_subcommand("check", "compare collection with the product formula");
  ocheck->add_option("--length", length, "maximal letters per word")->capture_default_str();
  ocheck->callback([&] { action = [&] { return cmd_oracle_check(g, length); }; });

  auto* emb = app.add_subcommand("embed", "components of an element in the product of rank-3 groups");
  emb->add_option("--element", element, "JSON element")->required();
  emb->callback([&] { action = [&] { return cmd_embed(g, element); }; });

  auto* loop = app.add_subcommand("loop", "the Moufang loop M of the rank-3 group");
  loop->require_subcommand(1);
  auto add_table_opts = [&](CLI::App* c) {
    c->add_option("--table", table, "loop table file");
    c->add_option("--format", format, "csv or bin (default: bin for *.bin paths, else csv)")
        ->check(CLI::IsMember({"csv", "bin"}));
  };
  auto* lext = loop->add_subcommand("extract", "build M and optionally save its table");
  add_table_opts(lext);
  lext->callback([&] { action = [&] { return cmd_loop_extract(g, table, format); }; });
  auto* lver = loop->add_subcommand("verify", "Moufang identities on M or on a saved table");
  add_table_opts(lver);
  lver->add_option("--identity", identity, "left, right, middle or all")
      ->check(CLI::IsMember({"left", "right", "middle", "all"}))
      ->capture_default_str();
  lver->callback([&] { action = [&] { return cmd_loop_verify(g, identity, table, format); }; });
  auto* lcen = loop->add_subcommand("center", "centre, nucleus and centre basis of M");
  lcen->callback([&] { action = [&] { return cmd_loop_center(g); }; });
  auto* lexp = loop->add_subcommand("export", "write the multiplication table of M");
  add_table_opts(lexp);
  lexp->add_option("--labels", labels, "CSV of index, packed code and group element");
  lexp->callback([&] { action = [&] { return cmd_loop_export(g, table, format, labels); }; });
  auto* lfree = loop->add_subcommand("free", "realise the free loop of rank n inside a product of copies of M");
  lfree->callback([&] { action = [&] { return cmd_loop_free(g); }; });

  auto* cl = app.add_subcommand("codeloop", "code loops as quotients of M");
  cl->require_subcommand(1);
  auto* cq = cl->add_subcommand("quotient", "quotient by the hyperplane ker(lambda)");
  cq->add_option("--lambda", lambda, "characteristic vector as 0/1 string")->required();
  add_table_opts(cq);
  cq->callback([&] { action = [&] { return cmd_codeloop_quotient(g, lambda, table, format); }; });
  auto* cs = cl->add_subcommand("sweep", "all codimension-1 subspaces of the centre");
  cs->add_option("--csv", csv, "CSV summary path");
  cs->callback([&] {
    action = [&] {
      Report rep(g, "codeloop sweep");
      const int code = run_sweep(rep, g, csv);
      rep.footer(code);
      return code;
    };
  });
  auto* cc = cl->add_subcommand("charvec", "characteristic vector of a code loop");
  cc->add_option("--lambda", lambda, "take the quotient of M by ker(lambda)");
  add_table_opts(cc);
  cc->add_option("--gens", gens, "comma-separated generator indices for --table");
  cc->callback([&] { action = [&] { return cmd_codeloop_charvec(g, lambda, table, format, gens); }; });

  auto* exp = app.add_subcommand("export", "bit-packed dump of the enumerated group");
  exp->add_option("--dump", dump, "output path")->required();
  exp->add_option("--limit", limit, "write only the first records");
  exp->callback([&] { action = [&] { return cmd_export(g, dump, limit); }; });

  for (auto* sub : {construct, verify, oracle, onorm, orand, ocheck, emb, loop, lext, lver, lcen, lexp, lfree, cl, cq,
                    cs, cc, exp})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (g.samples && *g.samples == 0) throw UsageError("--samples must be positive");
    if (g.jobs == 0) g.jobs = 1;
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
