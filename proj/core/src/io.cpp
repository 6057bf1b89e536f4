#include "votematch/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace votematch {

namespace {

// Voter-line counts and edge counts are multiplicities, not data sizes; the
// cap just keeps a typo from allocating gigabytes.
constexpr long long kMaxMultiplicity = 1000000;

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> effective_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line;
    line.number = number;
    std::string token;
    while (ls >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

long long parse_int(const std::string& token, int line, const std::string& what) {
  long long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected an integer " + what + ", got '" + token + "'");
  }
  return value;
}

class LineCursor {
 public:
  explicit LineCursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  const Line& take() { return lines_[pos_++]; }
  int here() const { return done() ? last_line_() : lines_[pos_].number; }

  const Line& expect(const std::string& keyword) {
    if (done()) throw ParseError(last_line_(), "missing '" + keyword + "' line");
    const Line& line = take();
    if (line.tokens[0] != keyword) {
      throw ParseError(line.number, "expected '" + keyword + "', got '" + line.tokens[0] + "'");
    }
    return line;
  }

 private:
  int last_line_() const { return lines_.empty() ? 1 : lines_.back().number; }

  std::vector<Line> lines_;
  size_t pos_ = 0;
};

CandidateId make_candidate(const std::string& name, int line) {
  try {
    return CandidateId(name);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

std::vector<Voter> parse_voter_line(const Line& line, const Rule& rule,
                                    const std::vector<CandidateId>& candidates) {
  size_t i = 0;
  long long count = parse_int(line.tokens[i++], line.number, "voter count");
  if (count < 1 || count > kMaxMultiplicity) {
    throw ParseError(line.number, "voter count must be in 1.." + std::to_string(kMaxMultiplicity));
  }
  long long price = 1;
  if (i < line.tokens.size() && line.tokens[i] == "price") {
    ++i;
    if (i >= line.tokens.size()) throw ParseError(line.number, "missing price value");
    price = parse_int(line.tokens[i++], line.number, "price");
    if (price < 0) throw ParseError(line.number, "price must be nonnegative");
  }
  if (i >= line.tokens.size()) throw ParseError(line.number, "missing vote kind");
  const std::string& kind_token = line.tokens[i++];
  VoteKind kind;
  if (kind_token == "approve") {
    kind = VoteKind::kApprove;
  } else if (kind_token == "veto") {
    kind = VoteKind::kVeto;
  } else {
    throw ParseError(line.number, "expected 'approve' or 'veto', got '" + kind_token + "'");
  }
  const VoteKind rule_kind =
      rule.kind == RuleKind::kApproval ? VoteKind::kApprove : VoteKind::kVeto;
  if (kind != rule_kind) {
    throw ParseError(line.number, "vote kind does not match the rule");
  }
  std::vector<CandidateId> chosen;
  while (i < line.tokens.size()) {
    CandidateId c = make_candidate(line.tokens[i], line.number);
    if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) {
      throw ParseError(line.number, "unknown candidate " + c.name());
    }
    chosen.push_back(std::move(c));
    ++i;
  }
  if (static_cast<int>(chosen.size()) != rule.k) {
    throw ParseError(line.number, "vote names " + std::to_string(chosen.size()) +
                                      " candidates, the rule needs " + std::to_string(rule.k));
  }
  try {
    Vote vote(kind, std::move(chosen));
    return std::vector<Voter>(static_cast<size_t>(count), Voter{std::move(vote), price});
  } catch (const std::invalid_argument& e) {
    throw ParseError(line.number, e.what());
  }
}

void write_voters(std::ostringstream& out, const std::vector<Voter>& voters) {
  size_t i = 0;
  while (i < voters.size()) {
    size_t j = i;
    while (j < voters.size() && voters[j] == voters[i]) ++j;
    out << (j - i);
    if (voters[i].price != 1) out << " price " << voters[i].price;
    out << (voters[i].vote.kind() == VoteKind::kApprove ? " approve" : " veto");
    for (const CandidateId& c : voters[i].vote.chosen()) out << ' ' << c.name();
    out << '\n';
    i = j;
  }
}

std::string rule_token(const Rule& rule) {
  if (rule.kind == RuleKind::kApproval && rule.k == 2) return "2approval";
  if (rule.kind == RuleKind::kVeto && rule.k == 2) return "2veto";
  if (rule.kind == RuleKind::kVeto && rule.k == 3) return "3veto";
  throw std::invalid_argument("no file token for this rule");
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  LineCursor cursor(effective_lines(text));
  ProblemFile file;

  {
    const Line& line = cursor.expect("election");
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'election <name>'");
    file.name = line.tokens[1];
  }
  {
    const Line& line = cursor.expect("candidates");
    if (line.tokens.size() < 2) throw ParseError(line.number, "expected at least one candidate");
    for (size_t i = 1; i < line.tokens.size(); ++i) {
      CandidateId c = make_candidate(line.tokens[i], line.number);
      if (std::find(file.candidates.begin(), file.candidates.end(), c) !=
          file.candidates.end()) {
        throw ParseError(line.number, "duplicate candidate " + c.name());
      }
      file.candidates.push_back(std::move(c));
    }
  }
  {
    const Line& line = cursor.expect("preferred");
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'preferred <name>'");
    file.preferred = make_candidate(line.tokens[1], line.number);
    if (std::find(file.candidates.begin(), file.candidates.end(), file.preferred) ==
        file.candidates.end()) {
      throw ParseError(line.number, "preferred candidate " + file.preferred.name() +
                                        " is not in the candidate list");
    }
  }
  {
    const Line& line = cursor.expect("problem");
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'problem <kind>'");
    if (line.tokens[1] == "ccrv") {
      file.kind = ProblemKind::kCcrv;
    } else if (line.tokens[1] == "priced-ccrv") {
      file.kind = ProblemKind::kPricedCcrv;
    } else if (line.tokens[1] == "bribery") {
      file.kind = ProblemKind::kBribery;
    } else {
      throw ParseError(line.number, "unknown problem kind '" + line.tokens[1] + "'");
    }
  }
  {
    const Line& line = cursor.expect("rule");
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'rule <name>'");
    if (line.tokens[1] == "2approval") {
      file.rule = Rule{RuleKind::kApproval, 2};
    } else if (line.tokens[1] == "2veto") {
      file.rule = Rule{RuleKind::kVeto, 2};
    } else if (line.tokens[1] == "3veto") {
      file.rule = Rule{RuleKind::kVeto, 3};
    } else {
      throw ParseError(line.number, "unknown rule '" + line.tokens[1] + "'");
    }
    if (file.kind != ProblemKind::kBribery && file.rule != Rule{RuleKind::kApproval, 2}) {
      throw ParseError(line.number, "replacement control requires the 2approval rule");
    }
    if (file.rule.k > static_cast<int>(file.candidates.size())) {
      throw ParseError(line.number, "the rule chooses more candidates than exist");
    }
  }
  {
    const Line& line = cursor.expect("limit");
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'limit <int>'");
    file.limit = parse_int(line.tokens[1], line.number, "limit");
    if (file.limit < 0) throw ParseError(line.number, "limit must be nonnegative");
  }

  cursor.expect("registered");
  bool in_unregistered = false;
  while (true) {
    if (cursor.done()) throw ParseError(cursor.here(), "missing 'end' line");
    const Line& line = cursor.take();
    if (line.tokens[0] == "end") {
      if (line.tokens.size() != 1) throw ParseError(line.number, "'end' takes no arguments");
      break;
    }
    if (line.tokens[0] == "unregistered") {
      if (line.tokens.size() != 1) {
        throw ParseError(line.number, "'unregistered' takes no arguments");
      }
      if (file.kind == ProblemKind::kBribery) {
        throw ParseError(line.number, "bribery instances have no unregistered block");
      }
      if (in_unregistered) throw ParseError(line.number, "repeated 'unregistered' block");
      in_unregistered = true;
      continue;
    }
    std::vector<Voter> voters = parse_voter_line(line, file.rule, file.candidates);
    auto& target = in_unregistered ? file.unregistered : file.registered;
    target.insert(target.end(), voters.begin(), voters.end());
  }
  if (!cursor.done()) {
    throw ParseError(cursor.peek().number, "unexpected content after 'end'");
  }
  return file;
}

std::string write_problem(const ProblemFile& file) {
  std::ostringstream out;
  out << "election " << file.name << '\n';
  out << "candidates";
  for (const CandidateId& c : file.candidates) out << ' ' << c.name();
  out << '\n';
  out << "preferred " << file.preferred.name() << '\n';
  out << "problem ";
  switch (file.kind) {
    case ProblemKind::kCcrv:
      out << "ccrv";
      break;
    case ProblemKind::kPricedCcrv:
      out << "priced-ccrv";
      break;
    case ProblemKind::kBribery:
      out << "bribery";
      break;
  }
  out << '\n';
  out << "rule " << rule_token(file.rule) << '\n';
  out << "limit " << file.limit << '\n';
  out << "registered\n";
  write_voters(out, file.registered);
  if (file.kind != ProblemKind::kBribery && !file.unregistered.empty()) {
    out << "unregistered\n";
    write_voters(out, file.unregistered);
  }
  out << "end\n";
  return out.str();
}

CcrvInstance to_ccrv_instance(const ProblemFile& file) {
  if (file.kind == ProblemKind::kBribery) {
    throw std::invalid_argument("this file holds a bribery problem, not replacement control");
  }
  CcrvInstance instance{file.candidates,
                        file.registered,
                        file.unregistered,
                        file.preferred,
                        file.limit,
                        file.kind == ProblemKind::kPricedCcrv};
  validate(instance);
  return instance;
}

BriberyInstance to_bribery_instance(const ProblemFile& file) {
  if (file.kind != ProblemKind::kBribery) {
    throw std::invalid_argument("this file holds a replacement-control problem, not bribery");
  }
  BriberyInstance instance{file.candidates, file.registered, file.preferred, file.limit,
                           file.rule};
  validate(instance);
  return instance;
}

ProblemFile to_problem_file(const std::string& name, const CcrvInstance& instance) {
  validate(instance);
  ProblemFile file;
  file.name = name;
  file.kind = instance.priced ? ProblemKind::kPricedCcrv : ProblemKind::kCcrv;
  file.rule = Rule{RuleKind::kApproval, 2};
  file.limit = instance.limit;
  file.preferred = instance.preferred;
  file.candidates = instance.candidates;
  file.registered = instance.registered;
  file.unregistered = instance.unregistered;
  return file;
}

ProblemFile to_problem_file(const std::string& name, const BriberyInstance& instance) {
  validate(instance);
  ProblemFile file;
  file.name = name;
  file.kind = ProblemKind::kBribery;
  file.rule = instance.rule;
  file.limit = instance.budget;
  file.preferred = instance.preferred;
  file.candidates = instance.candidates;
  file.registered = instance.voters;
  return file;
}

PerfectBMatchingProblem read_graph(const std::string& text) {
  LineCursor cursor(effective_lines(text));
  cursor.expect("graph");
  PerfectBMatchingProblem problem;
  std::vector<std::string> names;
  bool edges_started = false;
  while (true) {
    if (cursor.done()) throw ParseError(cursor.here(), "missing 'end' line");
    const Line& line = cursor.take();
    if (line.tokens[0] == "end") {
      if (line.tokens.size() != 1) throw ParseError(line.number, "'end' takes no arguments");
      break;
    }
    if (line.tokens[0] == "vertex") {
      if (edges_started) throw ParseError(line.number, "vertex lines must precede edge lines");
      if (line.tokens.size() != 4 || line.tokens[2] != "b") {
        throw ParseError(line.number, "expected 'vertex <name> b <int>'");
      }
      const std::string& name = line.tokens[1];
      if (std::find(names.begin(), names.end(), name) != names.end()) {
        throw ParseError(line.number, "duplicate vertex " + name);
      }
      long long demand = parse_int(line.tokens[3], line.number, "demand");
      if (demand < 0 || demand > kMaxMultiplicity) {
        throw ParseError(line.number, "demand must be in 0.." + std::to_string(kMaxMultiplicity));
      }
      names.push_back(name);
      problem.graph.add_vertex(name);
      problem.demand.push_back(static_cast<int>(demand));
      continue;
    }
    if (line.tokens[0] == "edge") {
      edges_started = true;
      if ((line.tokens.size() != 5 && line.tokens.size() != 7) || line.tokens[3] != "weight" ||
          (line.tokens.size() == 7 && line.tokens[5] != "count")) {
        throw ParseError(line.number, "expected 'edge <u> <v> weight <int> [count <int>]'");
      }
      auto vertex_of = [&](const std::string& name) {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw ParseError(line.number, "unknown vertex " + name);
        return static_cast<VertexId>(it - names.begin());
      };
      VertexId u = vertex_of(line.tokens[1]);
      VertexId v = vertex_of(line.tokens[2]);
      if (u == v) throw ParseError(line.number, "self-loops are not allowed");
      Weight weight = parse_int(line.tokens[4], line.number, "weight");
      long long count = 1;
      if (line.tokens.size() == 7) {
        count = parse_int(line.tokens[6], line.number, "count");
        if (count < 1 || count > kMaxMultiplicity) {
          throw ParseError(line.number, "count must be in 1.." + std::to_string(kMaxMultiplicity));
        }
      }
      for (long long i = 0; i < count; ++i) problem.graph.add_edge(u, v, weight);
      continue;
    }
    throw ParseError(line.number, "expected 'vertex', 'edge' or 'end', got '" + line.tokens[0] +
                                      "'");
  }
  if (!cursor.done()) {
    throw ParseError(cursor.peek().number, "unexpected content after 'end'");
  }
  return problem;
}

std::string write_graph(const PerfectBMatchingProblem& problem) {
  const int n = problem.graph.vertex_count();
  if (static_cast<int>(problem.demand.size()) != n) {
    throw std::invalid_argument("demand vector size does not match vertex count");
  }
  for (int v = 0; v < n; ++v) {
    const std::string& name = problem.graph.vertex_name(v);
    if (name.empty() || name.find('#') != std::string::npos ||
        name.find_first_of(" \t\r\n\f\v") != std::string::npos) {
      throw std::invalid_argument("vertex name '" + name + "' cannot be serialized");
    }
    for (int u = 0; u < v; ++u) {
      if (problem.graph.vertex_name(u) == name) {
        throw std::invalid_argument("duplicate vertex name " + name);
      }
    }
  }
  std::ostringstream out;
  out << "graph\n";
  for (int v = 0; v < n; ++v) {
    out << "vertex " << problem.graph.vertex_name(v) << " b "
        << problem.demand[static_cast<size_t>(v)] << '\n';
  }
  const auto& edges = problem.graph.edges();
  size_t i = 0;
  while (i < edges.size()) {
    size_t j = i;
    while (j < edges.size() && edges[j].u == edges[i].u && edges[j].v == edges[i].v &&
           edges[j].weight == edges[i].weight) {
      ++j;
    }
    out << "edge " << problem.graph.vertex_name(edges[i].u) << ' '
        << problem.graph.vertex_name(edges[i].v) << " weight " << edges[i].weight;
    if (j - i > 1) out << " count " << (j - i);
    out << '\n';
    i = j;
  }
  out << "end\n";
  return out.str();
}

Rx3cInstance read_rx3c(const std::string& text) {
  LineCursor cursor(effective_lines(text));
  cursor.expect("rx3c");
  Rx3cInstance instance;
  {
    const Line& line = cursor.expect("elements");
    for (size_t i = 1; i < line.tokens.size(); ++i) instance.elements.push_back(line.tokens[i]);
  }
  while (true) {
    if (cursor.done()) throw ParseError(cursor.here(), "missing 'end' line");
    const Line& line = cursor.take();
    if (line.tokens[0] == "end") {
      if (line.tokens.size() != 1) throw ParseError(line.number, "'end' takes no arguments");
      break;
    }
    if (line.tokens[0] != "set" || line.tokens.size() != 4) {
      throw ParseError(line.number, "expected 'set <a> <b> <c>'");
    }
    instance.sets.push_back({line.tokens[1], line.tokens[2], line.tokens[3]});
  }
  if (!cursor.done()) {
    throw ParseError(cursor.peek().number, "unexpected content after 'end'");
  }
  validate(instance);
  return instance;
}

std::string write_rx3c(const Rx3cInstance& instance) {
  validate(instance);
  std::ostringstream out;
  out << "rx3c\n";
  out << "elements";
  for (const std::string& e : instance.elements) out << ' ' << e;
  out << '\n';
  for (const auto& s : instance.sets) {
    out << "set " << s[0] << ' ' << s[1] << ' ' << s[2] << '\n';
  }
  out << "end\n";
  return out.str();
}

}  // namespace votematch
