#include "clawdec/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "clawdec/canonical.hpp"
#include "clawdec/graph_io.hpp"
#include "clawdec/independent.hpp"
#include "clawdec/star_decomposition.hpp"

namespace clawdec {

std::uint64_t graph_fingerprint(const CompactGraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint8_t>(g.n));
  for (int i = 0; i < g.n; ++i)
    for (int s = 0; s < 32; s += 8) mix(static_cast<std::uint8_t>(g.adj[i] >> s));
  return h;
}

namespace {

struct SubtreeResult {
  std::int64_t total = 0;
  std::int64_t non_decomposable = 0;
  std::int64_t rejected = 0;
  std::uint64_t checksum = 0;
  std::vector<std::string> witnesses;
};

std::string checkpoint_line(const std::string& key, const SubtreeResult& r) {
  std::ostringstream out;
  out << key << '\t' << r.total << '\t' << r.non_decomposable << '\t' << r.rejected << '\t' << r.checksum << '\t';
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) out << (i ? "," : "") << r.witnesses[i];
  out << "\tend";  // a line without this marker was cut off mid-write
  return out.str();
}

std::map<std::string, SubtreeResult> read_checkpoint(const std::string& path) {
  std::map<std::string, SubtreeResult> done;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream fields(line);
    for (std::string field; std::getline(fields, field, '\t');) f.push_back(field);
    if (f.size() != 7 || f[6] != "end") continue;  // torn line from an interrupted run
    const std::string &key = f[0], &total = f[1], &nondec = f[2], &rejected = f[3], &checksum = f[4],
                      &witnesses = f[5];
    SubtreeResult r;
    try {
      r.total = std::stoll(total);
      r.non_decomposable = std::stoll(nondec);
      r.rejected = std::stoll(rejected);
      r.checksum = std::stoull(checksum);
    } catch (const std::exception&) {
      continue;
    }
    std::istringstream ws(witnesses);
    for (std::string w; std::getline(ws, w, ',');)
      if (!w.empty()) r.witnesses.push_back(w);
    if (static_cast<std::int64_t>(r.witnesses.size()) != r.non_decomposable) continue;
    done[key] = std::move(r);
  }
  return done;
}

SubtreeResult survey_subtree(const RegularGenerator& gen, const SubtreeRoot& root, int n) {
  SubtreeResult r;
  gen.run_subtree(root, [&](const CompactGraph& cg) {
    ++r.total;
    r.checksum += graph_fingerprint(cg);
    const Graph g = cg.to_graph();
    if (!has_independent_set(g, n / 3)) {
      ++r.rejected;
    } else if (decomposable(decide_claw_4regular(g))) {
      return;
    }
    ++r.non_decomposable;
    r.witnesses.push_back(write_graph6(g));
  });
  return r;
}

}  // namespace

SurveyReport survey_claw(int n, const SurveyOptions& options) {
  if (n % 3 != 0) throw Error(Errc::NotDivisibleByThree, "order " + std::to_string(n) + " is not divisible by 3", n);
  if (n >= 18 && !options.allow_large)
    throw Error(Errc::RefusedScale, "order " + std::to_string(n) + " needs the large-scale override", n);
  const auto started = std::chrono::steady_clock::now();

  SurveyReport report;
  report.n = n;
  if (n < 5) {
    // No 4-regular graph exists; the generator would reject d >= n.
    report.wall_seconds = 0;
    return report;
  }
  const RegularGenerator gen(n, 4, true);
  const std::vector<SubtreeRoot> roots = gen.roots(options.split_row);
  report.subtrees = static_cast<std::int64_t>(roots.size());

  std::map<std::string, SubtreeResult> resumed;
  if (!options.checkpoint_path.empty()) resumed = read_checkpoint(options.checkpoint_path);
  std::ofstream checkpoint;
  if (!options.checkpoint_path.empty()) {
    bool torn_tail = false;
    if (std::ifstream tail(options.checkpoint_path, std::ios::ate); tail && tail.tellg() > 0) {
      tail.seekg(-1, std::ios::end);
      torn_tail = tail.get() != '\n';
    }
    checkpoint.open(options.checkpoint_path, std::ios::app);
    if (!checkpoint) throw Error(Errc::InvalidArgument, "cannot open checkpoint file " + options.checkpoint_path);
    if (torn_tail) checkpoint << '\n';
  }

  std::vector<SubtreeResult> results(roots.size());
  std::vector<std::string> keys(roots.size());
  std::vector<char> pending(roots.size(), 1);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    keys[i] = roots[i].key();
    if (auto it = resumed.find(keys[i]); it != resumed.end()) {
      results[i] = it->second;
      pending[i] = 0;
      ++report.subtrees_resumed;
    }
  }

  std::atomic<std::size_t> next{0};
  std::mutex checkpoint_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < roots.size();) {
      if (!pending[i]) continue;
      results[i] = survey_subtree(gen, roots[i], n);
      if (checkpoint.is_open()) {
        std::lock_guard lock(checkpoint_mutex);
        checkpoint << checkpoint_line(keys[i], results[i]) << '\n' << std::flush;
      }
    }
  };
  const int workers = std::max(1, options.workers);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<std::pair<CanonicalForm, std::string>> witnesses;
  for (const SubtreeResult& r : results) {
    report.total_generated += r.total;
    report.non_decomposable += r.non_decomposable;
    report.rejected_by_independence += r.rejected;
    report.checksum += r.checksum;
    for (const std::string& w : r.witnesses) witnesses.emplace_back(canonical_form(parse_graph6(w)), w);
  }
  std::sort(witnesses.begin(), witnesses.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& w : witnesses) report.witnesses.push_back(std::move(w.second));

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace clawdec
