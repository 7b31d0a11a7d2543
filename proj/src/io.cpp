#include "shiftbribery/io.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sb {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t from = 0;
  while (true) {
    const auto at = s.find(sep, from);
    out.push_back(trim(s.substr(from, at == std::string_view::npos ? at : at - from)));
    if (at == std::string_view::npos) return out;
    from = at + 1;
  }
}

[[noreturn]] void fail_at(int line, const std::string& what) {
  fail(ErrorKind::invalid, "line " + std::to_string(line) + ": " + what);
}

class LineError {
 public:
  explicit LineError(int line) : line_(line) {}
  [[noreturn]] void operator()(const std::string& what) const { fail_at(line_, what); }

 private:
  int line_;
};

std::int64_t parse_int(std::string_view text, const LineError& error, std::string_view what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    error("expected an integer for " + std::string(what) + ", got '" + std::string(text) + "'");
  return v;
}

struct Line {
  int number;
  std::string_view text;
};

PriceFunction parse_price(std::string_view spec, int m, int position, const LineError& error) {
  if (spec == "unit") return PriceFunction::unit(m, position);
  const auto colon = spec.find(':');
  const auto kind = trim(spec.substr(0, colon));
  if (colon == std::string_view::npos || (kind != "aon" && kind != "list"))
    error("price spec must be unit, aon:C or list:v1,...; got '" + std::string(spec) + "'");
  const auto rest = trim(spec.substr(colon + 1));
  if (kind == "aon") {
    const auto c = parse_int(rest, error, "aon price");
    if (c < 0) error("aon price must be nonnegative");
    return PriceFunction::all_or_nothing(m, position, c);
  }
  std::vector<std::int64_t> table;
  if (!rest.empty())
    for (auto v : split(rest, ',')) table.push_back(parse_int(v, error, "list price"));
  if (static_cast<int>(table.size()) != m - 1)
    error("list: expects " + std::to_string(m - 1) + " values (m-1), got " + std::to_string(table.size()));
  return PriceFunction(std::move(table));
}

std::string price_spec(const PriceFunction& pf, int m, int position) {
  if (pf == PriceFunction::unit(m, position)) return "unit";
  if (position > 1 && pf(1) > 0 && pf == PriceFunction::all_or_nothing(m, position, pf(1)))
    return "aon:" + std::to_string(pf(1));
  std::string s = "list:";
  for (std::size_t l = 0; l < pf.table().size(); ++l) s += (l ? "," : "") + std::to_string(pf.table()[l]);
  return s;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  std::vector<Line> lines;
  {
    int number = 0;
    for (auto raw : split(text, '\n')) {
      ++number;
      auto body = trim(raw.substr(0, raw.find('#')));
      if (!body.empty()) lines.push_back({number, body});
    }
  }

  std::map<std::string, Line, std::less<>> header;
  std::size_t next = 0;
  for (; next < lines.size(); ++next) {
    const auto& line = lines[next];
    LineError error(line.number);
    const auto colon = line.text.find(':');
    if (colon == std::string_view::npos) error("expected 'key: value', got '" + std::string(line.text) + "'");
    std::string key(trim(line.text.substr(0, colon)));
    static const std::set<std::string, std::less<>> known{"rule", "alpha", "candidates", "preferred", "budget",
                                                          "voters"};
    if (!known.contains(key)) error("unknown key '" + key + "'");
    if (header.contains(key)) error("duplicate key '" + key + "'");
    header[key] = {line.number, trim(line.text.substr(colon + 1))};
    if (key == "voters") {
      ++next;
      break;
    }
  }
  const int last_line = lines.empty() ? 0 : lines.back().number;
  for (auto key : {"rule", "candidates", "preferred", "voters"})
    if (!header.contains(key)) fail_at(last_line, std::string("missing '") + key + ":' line");

  auto value = [&](const char* key) { return header.at(key); };
  VotingRule rule;
  {
    auto [number, v] = value("rule");
    if (v == "borda") rule = VotingRule::borda();
    else if (v == "maximin") rule = VotingRule::maximin();
    else if (v == "copeland") rule = VotingRule::copeland();
    else fail_at(number, "unknown rule '" + std::string(v) + "'");
  }
  if (header.contains("alpha")) {
    auto [number, v] = value("alpha");
    if (rule.kind != RuleKind::copeland) fail_at(number, "alpha is only allowed with copeland");
    try {
      rule = VotingRule::copeland(parse_rational(v));
    } catch (const Error& e) {
      fail_at(number, e.what());
    }
  }

  std::vector<std::string> names;
  std::map<std::string, CandidateId, std::less<>> index;
  {
    auto [number, v] = value("candidates");
    for (auto name : split(v, ',')) {
      if (name.empty()) fail_at(number, "empty candidate name");
      if (name.find_first_of(" \t>;") != std::string_view::npos)
        fail_at(number, "candidate name '" + std::string(name) + "' contains a reserved character");
      if (!index.emplace(std::string(name), static_cast<CandidateId>(names.size())).second)
        fail_at(number, "duplicate candidate '" + std::string(name) + "'");
      names.emplace_back(name);
    }
  }
  const int m = static_cast<int>(names.size());

  CandidateId preferred;
  {
    auto [number, v] = value("preferred");
    auto it = index.find(v);
    if (it == index.end()) fail_at(number, "unknown candidate '" + std::string(v) + "'");
    preferred = it->second;
  }
  std::optional<std::int64_t> budget;
  if (header.contains("budget")) {
    auto [number, v] = value("budget");
    budget = parse_int(v, LineError(number), "budget");
    if (*budget < 0) fail_at(number, "budget must be nonnegative");
  }
  std::int64_t n;
  {
    auto [number, v] = value("voters");
    n = parse_int(v, LineError(number), "voters");
    if (n < 1) fail_at(number, "at least one voter is required");
    if (n > kMaxVoters) fail(ErrorKind::capacity, "line " + std::to_string(number) + ": too many voters");
  }

  std::vector<PreferenceOrder> orders;
  std::vector<std::pair<int, std::string_view>> specs;
  for (; next < lines.size(); ++next) {
    const auto& line = lines[next];
    LineError error(line.number);
    if (static_cast<std::int64_t>(orders.size()) == n)
      error("unexpected line after " + std::to_string(n) + " voters");
    auto parts = split(line.text, ';');
    if (parts.size() != 2) error("voter line must be 'ORDER ; PRICES'");
    PreferenceOrder order;
    std::vector<char> seen(m, 0);
    for (auto name : split(parts[0], '>')) {
      auto it = index.find(name);
      if (it == index.end()) error("unknown candidate '" + std::string(name) + "'");
      if (seen[it->second]++) error("duplicate candidate '" + std::string(name) + "' in order");
      order.push_back(it->second);
    }
    if (static_cast<int>(order.size()) != m)
      error("order ranks " + std::to_string(order.size()) + " of " + std::to_string(m) + " candidates");
    orders.push_back(std::move(order));
    specs.push_back({line.number, parts[1]});
  }
  if (static_cast<std::int64_t>(orders.size()) != n)
    fail_at(last_line, "expected " + std::to_string(n) + " voters, found " + std::to_string(orders.size()));

  Election election(std::move(names), std::move(orders));
  PriceList prices;
  for (int i = 0; i < election.num_voters(); ++i) {
    const auto [number, spec] = specs[i];
    LineError error(number);
    const int position = election.position(i, preferred);
    prices.push_back(parse_price(spec, m, position, error));
    if (auto bad = validate(prices.back(), position))
      error(bad->reason + " at shift " + std::to_string(bad->index));
  }
  InstanceFile file{Instance{std::move(election), std::move(prices), preferred, budget}, rule};
  file.instance.validate();
  return file;
}

std::string serialize_instance(const InstanceFile& file, std::string_view header) {
  const auto& inst = file.instance;
  const auto& e = inst.election;
  const int m = e.num_candidates();
  std::ostringstream out;
  if (!header.empty())
    for (auto line : split(header, '\n')) out << "# " << line << '\n';
  out << "rule: " << rule_name(file.rule.kind) << '\n';
  if (file.rule.kind == RuleKind::copeland) out << "alpha: " << format_rational(file.rule.alpha) << '\n';
  out << "candidates: ";
  for (int c = 0; c < m; ++c) out << (c ? "," : "") << e.name(c);
  out << "\npreferred: " << e.name(inst.preferred) << '\n';
  if (inst.budget) out << "budget: " << *inst.budget << '\n';
  out << "voters: " << e.num_voters() << '\n';
  for (int i = 0; i < e.num_voters(); ++i) {
    for (int k = 0; k < m; ++k) out << (k ? ">" : "") << e.name(e.voter(i)[k]);
    out << " ; " << price_spec(inst.prices[i], m, e.position(i, inst.preferred)) << '\n';
  }
  return out.str();
}

std::string serialize_result(const SolveResult& r, const ResultMeta& meta) {
  nlohmann::ordered_json doc;
  doc["solver"] = meta.solver;
  doc["rule"] = rule_name(meta.rule);
  auto params = nlohmann::ordered_json::object();
  if (meta.t) params["t"] = *meta.t;
  if (meta.epsilon) params["epsilon"] = format_rational(*meta.epsilon);
  if (meta.max_affected) params["max_affected"] = *meta.max_affected;
  if (meta.budget) params["budget"] = *meta.budget;
  doc["parameters"] = params;
  doc["feasible"] = r.feasible;
  if (r.feasible && r.action) doc["action"] = *r.action;
  doc["spent"] = r.spent;
  doc["guarantee"] = describe(r.guarantee);
  doc["wall_seconds"] = meta.wall_seconds;
  doc["telemetry"] = {{"explored", r.explored}};
  return doc.dump(2) + "\n";
}

}  // namespace sb
