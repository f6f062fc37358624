#include "naed/sweep.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "naed/circuits.hpp"
#include "naed/logical.hpp"
#include "naed/rng.hpp"

namespace naed {

namespace {

using json = nlohmann::ordered_json;

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("NAEDSIM_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

void validate_grid(const SweepConfig& config) {
  if (config.reps < 1) throw ConfigError("reps must be at least 1");
  if (config.shots < 1) throw ConfigError("shots must be at least 1");
  if (config.n_list.empty() || config.q_list.empty()) {
    throw ConfigError("grid must contain at least one (N, Q) cell");
  }
  std::string bad;
  for (int n : config.n_list) {
    for (int q : config.q_list) {
      if (n < 2 || q < 1 || n * q > kMaxQubits) {
        bad += (bad.empty() ? "" : ", ") + std::string("(") +
               std::to_string(n) + "," + std::to_string(q) + ")";
      }
    }
  }
  if (!bad.empty()) {
    throw ConfigError("unsatisfiable grid cells (need N >= 2 and N*Q <= " +
                      std::to_string(kMaxQubits) + "): " + bad);
  }
}

// Expected counts of an exact distribution, apportioned by largest
// remainder so they always sum to `shots`. Noiseless GHZ cells carry
// probability exactly 1/2 per string, so even shot counts split exactly.
Counts exact_counts(const StateVector& state, std::uint64_t shots) {
  const Pdf pdf = pdf_from_state(state);
  Counts counts;
  std::vector<std::pair<double, std::string>> remainders;
  std::uint64_t assigned = 0;
  for (const auto& [bits, p] : pdf) {
    const double expected = p * static_cast<double>(shots);
    const auto floor = static_cast<std::uint64_t>(expected);
    if (floor > 0) counts[bits] = floor;
    assigned += floor;
    remainders.emplace_back(expected - static_cast<double>(floor), bits);
  }
  std::sort(remainders.begin(), remainders.end(),
            [](const auto& a, const auto& b) {
              return a.first != b.first ? a.first > b.first
                                        : a.second < b.second;
            });
  for (std::size_t i = 0; assigned < shots && i < remainders.size(); ++i) {
    counts[remainders[i].second] += 1;
    ++assigned;
  }
  return counts;
}

CellResult run_cell(const SweepConfig& config, int n, int q,
                    std::size_t cell_index) {
  CellResult cell;
  cell.n = n;
  cell.q = q;
  cell.code = experiment_code(q);
  const PhysicalCircuit circuit = build_ghz(n, q);

  // Without a noise model there is nothing to sample: every rep reports the
  // exact expected tally of the final state.
  std::optional<Counts> noiseless;
  if (!config.noise) noiseless = exact_counts(simulate(circuit), config.shots);

  double sum_full = 0.0, sum_kept = 0.0, sum_naed = 0.0;
  std::uint64_t naed_reps = 0;
  for (int rep = 0; rep < config.reps; ++rep) {
    RepResult r;
    r.rep = rep;
    r.seed = derive_seed(config.master_seed,
                         cell_index * static_cast<std::size_t>(config.reps) +
                             static_cast<std::size_t>(rep));
    const Counts counts =
        config.noise
            ? simulate_noisy(circuit, *config.noise, config.shots, r.seed)
            : *noiseless;
    r.tally = tally(counts, cell.code, n);
    r.metrics = metrics(r.tally, n, q);
    sum_full += r.metrics.mu_full;
    sum_kept += r.metrics.p_kept;
    if (r.metrics.mu_naed) {
      sum_naed += *r.metrics.mu_naed;
      ++naed_reps;
    }
    cell.reps.push_back(std::move(r));
  }
  cell.mean_mu_full = sum_full / config.reps;
  cell.mean_p_kept = sum_kept / config.reps;
  if (naed_reps > 0) cell.mean_mu_naed = sum_naed / naed_reps;
  return cell;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  validate_grid(config);

  struct Job {
    int n, q;
    std::size_t cell_index;
  };
  std::vector<Job> jobs;
  for (int n : config.n_list) {
    for (int q : config.q_list) {
      jobs.push_back({n, q, jobs.size()});
    }
  }

  SweepResult result;
  result.config = config;
  result.cells.resize(jobs.size());

  const int threads =
      std::min<int>(resolve_threads(config.threads),
                    static_cast<int>(jobs.size()));
  if (threads <= 1) {
    for (const Job& job : jobs) {
      result.cells[job.cell_index] =
          run_cell(config, job.n, job.q, job.cell_index);
    }
    return result;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        try {
          result.cells[i] = run_cell(config, jobs[i].n, jobs[i].q, i);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          next.store(jobs.size());
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return result;
}

namespace {

std::string fmt_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

json metrics_json(const Metrics& m) {
  json j;
  j["mu_full"] = m.mu_full;
  j["mu_naed"] = m.mu_naed ? json(*m.mu_naed) : json(nullptr);
  j["p_kept"] = m.p_kept;
  return j;
}

json tally_json(const Tally& t) {
  json j;
  j["T"] = t.total;
  j["r0"] = t.r0;
  j["r1"] = t.r1;
  j["ra"] = t.ra;
  j["rb"] = t.rb;
  json hist = json::object();
  for (const auto& [key, n] : t.accepted_hist) hist[key] = n;
  j["accepted"] = hist;
  return j;
}

json code_json(const BitFlipCode& code) {
  json j;
  j["Q"] = code.q;
  j["S"] = json::array();
  for (int i : code.s) j["S"].push_back(i);
  return j;
}

}  // namespace

std::string sweep_to_json(const SweepResult& result) {
  json root;
  json cfg;
  cfg["n_list"] = result.config.n_list;
  cfg["q_list"] = result.config.q_list;
  cfg["shots"] = result.config.shots;
  cfg["reps"] = result.config.reps;
  cfg["master_seed"] = result.config.master_seed;
  if (result.config.noise) {
    json n;
    n["p_gate"] = result.config.noise->p_gate;
    n["gamma"] = result.config.noise->gamma;
    n["seed"] = result.config.noise->seed;
    if (result.config.noise->paulis != "XYZ") {
      n["paulis"] = result.config.noise->paulis;
    }
    cfg["noise"] = n;
  } else {
    cfg["noise"] = nullptr;
  }
  root["config"] = cfg;

  root["cells"] = json::array();
  for (const auto& cell : result.cells) {
    json c;
    c["N"] = cell.n;
    c["Q"] = cell.q;
    c["code"] = code_json(cell.code);
    c["reps"] = json::array();
    for (const auto& rep : cell.reps) {
      json r;
      r["rep"] = rep.rep;
      r["seed"] = rep.seed;
      r["tally"] = tally_json(rep.tally);
      r["metrics"] = metrics_json(rep.metrics);
      c["reps"].push_back(std::move(r));
    }
    json mean;
    mean["mu_full"] = cell.mean_mu_full;
    mean["mu_naed"] =
        cell.mean_mu_naed ? json(*cell.mean_mu_naed) : json(nullptr);
    mean["p_kept"] = cell.mean_p_kept;
    c["mean"] = mean;
    root["cells"].push_back(std::move(c));
  }
  return root.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepResult& result) {
  std::string out = "N,Q,rep,seed,T,r0,r1,ra,rb,mu_full,mu_naed,p_kept\n";
  for (const auto& cell : result.cells) {
    for (const auto& rep : cell.reps) {
      out += std::to_string(cell.n) + "," + std::to_string(cell.q) + "," +
             std::to_string(rep.rep) + "," + std::to_string(rep.seed) + "," +
             std::to_string(rep.tally.total) + "," +
             std::to_string(rep.tally.r0) + "," +
             std::to_string(rep.tally.r1) + "," +
             std::to_string(rep.tally.ra) + "," +
             std::to_string(rep.tally.rb) + "," +
             fmt_double(rep.metrics.mu_full) + "," +
             (rep.metrics.mu_naed ? fmt_double(*rep.metrics.mu_naed)
                                  : std::string()) +
             "," + fmt_double(rep.metrics.p_kept) + "\n";
    }
  }
  return out;
}

InjectReport inject_study(int n_logical, int q, ErrorKind kind, double theta,
                          double phi) {
  InjectReport report;
  report.n = n_logical;
  report.q = q;
  report.spec.error = kind;
  report.spec.theta = theta;
  report.spec.phi = phi;

  const PhysicalCircuit circuit = build_ghz(n_logical, q);
  const BitFlipCode code = experiment_code(q);

  std::vector<int> sites{-1};
  for (int b : circuit.boundaries) {
    if (b - 1 != sites.back()) sites.push_back(b - 1);
  }

  for (int site : sites) {
    for (int qubit = 0; qubit < circuit.n_qubits; ++qubit) {
      InjectionSpec spec = report.spec;
      spec.site = site;
      spec.qubit = qubit;
      const StateVector state = simulate(inject(circuit, spec));

      const std::string zeros(n_logical, '0');
      const std::string ones(n_logical, '1');
      double rejected = 0.0, accepted = 0.0, corrupted = 0.0;
      const double norm = norm_squared(state);
      for (std::uint64_t b = 0; b < state.dim(); ++b) {
        const double p = std::norm(state.amps[b]) / norm;
        if (p == 0.0) continue;
        const auto c = classify_shot(
            code, n_logical, bits_of_index(b, state.n_qubits));
        if (!c.accepted) {
          rejected += p;
        } else {
          accepted += p;
          if (c.logical != zeros && c.logical != ones) corrupted += p;
        }
      }
      InjectCell cell;
      cell.site = site;
      cell.qubit = qubit;
      cell.rejection_rate = rejected;
      cell.corruption_rate = accepted > 0.0 ? corrupted / accepted : 0.0;
      report.cells.push_back(cell);
    }
  }
  return report;
}

std::string inject_report_to_json(const InjectReport& report) {
  json root;
  root["N"] = report.n;
  root["Q"] = report.q;
  root["error"] = json::parse(
      [&] {
        InjectionSpec s = report.spec;
        s.site = -1;
        s.qubit = 0;
        return s.to_json();
      }());
  root["cells"] = json::array();
  for (const auto& cell : report.cells) {
    json c;
    c["site"] = cell.site;
    c["qubit"] = cell.qubit;
    c["rejection_rate"] = cell.rejection_rate;
    c["corruption_rate"] = cell.corruption_rate;
    root["cells"].push_back(std::move(c));
  }
  return root.dump(2) + "\n";
}

std::string inject_report_to_csv(const InjectReport& report) {
  std::string out = "N,Q,site,qubit,rejection_rate,corruption_rate\n";
  for (const auto& cell : report.cells) {
    out += std::to_string(report.n) + "," + std::to_string(report.q) + "," +
           std::to_string(cell.site) + "," + std::to_string(cell.qubit) +
           "," + fmt_double(cell.rejection_rate) + "," +
           fmt_double(cell.corruption_rate) + "\n";
  }
  return out;
}

std::string plotdata_csv(const SweepResult& result,
                         const std::string& metric) {
  if (metric != "mu_full" && metric != "mu_naed" && metric != "p_kept") {
    throw ConfigError("unknown metric '" + metric +
                      "' (expected mu_full, mu_naed or p_kept)");
  }
  std::vector<int> ns = result.config.n_list;
  std::vector<int> qs = result.config.q_list;

  std::string out = "N\\Q";
  for (int q : qs) out += "," + std::to_string(q);
  out += "\n";
  for (int n : ns) {
    out += std::to_string(n);
    for (int q : qs) {
      out += ",";
      for (const auto& cell : result.cells) {
        if (cell.n != n || cell.q != q) continue;
        if (metric == "mu_full") {
          out += fmt_double(cell.mean_mu_full);
        } else if (metric == "p_kept") {
          out += fmt_double(cell.mean_p_kept);
        } else if (cell.mean_mu_naed) {
          out += fmt_double(*cell.mean_mu_naed);
        }
        break;
      }
    }
    out += "\n";
  }
  return out;
}

SweepResult read_sweep_json(const std::string& text) {
  const json root = json::parse(text);
  SweepResult result;
  result.config.n_list = root.at("config").at("n_list").get<std::vector<int>>();
  result.config.q_list = root.at("config").at("q_list").get<std::vector<int>>();
  result.config.shots = root.at("config").at("shots").get<std::uint64_t>();
  result.config.reps = root.at("config").at("reps").get<int>();
  result.config.master_seed =
      root.at("config").at("master_seed").get<std::uint64_t>();
  if (!root.at("config").at("noise").is_null()) {
    StochasticModel model;
    const auto& n = root.at("config").at("noise");
    model.p_gate = n.at("p_gate").get<double>();
    model.gamma = n.at("gamma").get<double>();
    model.seed = n.at("seed").get<std::uint64_t>();
    if (n.contains("paulis")) model.paulis = n.at("paulis").get<std::string>();
    result.config.noise = model;
  }
  for (const auto& c : root.at("cells")) {
    CellResult cell;
    cell.n = c.at("N").get<int>();
    cell.q = c.at("Q").get<int>();
    std::set<int> s;
    for (const auto& i : c.at("code").at("S")) s.insert(i.get<int>());
    cell.code = make_code(c.at("code").at("Q").get<int>(), s);
    for (const auto& r : c.at("reps")) {
      RepResult rep;
      rep.rep = r.at("rep").get<int>();
      rep.seed = r.at("seed").get<std::uint64_t>();
      const auto& t = r.at("tally");
      rep.tally.total = t.at("T").get<std::uint64_t>();
      rep.tally.r0 = t.at("r0").get<std::uint64_t>();
      rep.tally.r1 = t.at("r1").get<std::uint64_t>();
      rep.tally.ra = t.at("ra").get<std::uint64_t>();
      rep.tally.rb = t.at("rb").get<std::uint64_t>();
      for (const auto& [key, n] : t.at("accepted").items()) {
        rep.tally.accepted_hist[key] = n.get<std::uint64_t>();
      }
      const auto& m = r.at("metrics");
      rep.metrics.mu_full = m.at("mu_full").get<double>();
      if (!m.at("mu_naed").is_null()) {
        rep.metrics.mu_naed = m.at("mu_naed").get<double>();
      }
      rep.metrics.p_kept = m.at("p_kept").get<double>();
      cell.reps.push_back(std::move(rep));
    }
    const auto& mean = c.at("mean");
    cell.mean_mu_full = mean.at("mu_full").get<double>();
    if (!mean.at("mu_naed").is_null()) {
      cell.mean_mu_naed = mean.at("mu_naed").get<double>();
    }
    cell.mean_p_kept = mean.at("p_kept").get<double>();
    result.cells.push_back(std::move(cell));
  }
  return result;
}

SweepResult read_sweep_csv(const std::string& text) {
  SweepResult result;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "N,Q,rep,seed,T,r0,r1,ra,rb,mu_full,mu_naed,p_kept") {
    throw ConfigError("unrecognized CSV header");
  }
  std::map<std::pair<int, int>, std::size_t> index;
  std::set<int> ns, qs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 12) throw ConfigError("malformed CSV row");
    RepResult rep;
    const int n = std::stoi(fields[0]);
    const int q = std::stoi(fields[1]);
    rep.rep = std::stoi(fields[2]);
    rep.seed = std::stoull(fields[3]);
    rep.tally.total = std::stoull(fields[4]);
    rep.tally.r0 = std::stoull(fields[5]);
    rep.tally.r1 = std::stoull(fields[6]);
    rep.tally.ra = std::stoull(fields[7]);
    rep.tally.rb = std::stoull(fields[8]);
    rep.metrics.mu_full = std::stod(fields[9]);
    if (!fields[10].empty()) rep.metrics.mu_naed = std::stod(fields[10]);
    rep.metrics.p_kept = std::stod(fields[11]);

    const auto key = std::make_pair(n, q);
    if (!index.count(key)) {
      index[key] = result.cells.size();
      CellResult cell;
      cell.n = n;
      cell.q = q;
      cell.code = experiment_code(q);
      result.cells.push_back(std::move(cell));
      ns.insert(n);
      qs.insert(q);
    }
    result.cells[index[key]].reps.push_back(std::move(rep));
  }
  result.config.n_list.assign(ns.begin(), ns.end());
  result.config.q_list.assign(qs.begin(), qs.end());
  for (auto& cell : result.cells) {
    double sum_full = 0.0, sum_kept = 0.0, sum_naed = 0.0;
    std::uint64_t naed_reps = 0;
    for (const auto& rep : cell.reps) {
      sum_full += rep.metrics.mu_full;
      sum_kept += rep.metrics.p_kept;
      if (rep.metrics.mu_naed) {
        sum_naed += *rep.metrics.mu_naed;
        ++naed_reps;
      }
    }
    if (!cell.reps.empty()) {
      cell.mean_mu_full = sum_full / cell.reps.size();
      cell.mean_p_kept = sum_kept / cell.reps.size();
      if (naed_reps > 0) cell.mean_mu_naed = sum_naed / naed_reps;
    }
  }
  return result;
}

}  // namespace naed
