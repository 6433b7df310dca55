#include "mwav/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace mwav {

namespace {

constexpr const char* kFormatTag = "mwav-instance";
constexpr int kFormatVersion = 1;

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty, non-comment line as tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      tokens = tokenize(line);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::vector<std::string> require(const std::string& what) {
    std::vector<std::string> tokens;
    if (!next(tokens)) throw parse_error("unexpected end of input, expected " + what, line_);
    return tokens;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

long long parse_int(const std::string& tok, LineReader& reader, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw parse_error("expected an integer for " + what + ", got '" + tok + "'",
                      reader.line());
  }
}

long long keyword_int(LineReader& reader, const std::string& keyword) {
  std::vector<std::string> tokens = reader.require("'" + keyword + " <value>'");
  if (tokens.size() != 2 || tokens[0] != keyword)
    throw parse_error("expected '" + keyword + " <value>'", reader.line());
  return parse_int(tokens[1], reader, keyword);
}

Rational parse_rational(const std::string& tok, LineReader& reader) {
  try {
    return Rational::parse(tok);
  } catch (const contract_error& e) {
    throw parse_error(e.what(), reader.line());
  }
}

std::vector<CandidateId> parse_candidate_list(const std::vector<std::string>& tokens,
                                              std::size_t first,
                                              const std::vector<std::string>& names,
                                              LineReader& reader) {
  std::vector<CandidateId> ids;
  for (std::size_t t = first; t < tokens.size(); ++t) {
    bool found = false;
    for (std::size_t c = 0; c < names.size(); ++c) {
      if (names[c] == tokens[t]) {
        ids.push_back(static_cast<CandidateId>(c));
        found = true;
        break;
      }
    }
    if (!found)
      throw parse_error("unknown candidate name '" + tokens[t] + "'", reader.line());
  }
  return ids;
}

}  // namespace

ElectionInstance parse_instance(std::istream& in) {
  LineReader reader(in);

  std::vector<std::string> header = reader.require("format tag");
  if (header.size() != 2 || header[0] != kFormatTag)
    throw parse_error(std::string("expected '") + kFormatTag + " <version>'",
                      reader.line());
  if (parse_int(header[1], reader, "format version") != kFormatVersion)
    throw parse_error("unsupported format version " + header[1], reader.line());

  const int m = static_cast<int>(keyword_int(reader, "candidates"));
  const int n = static_cast<int>(keyword_int(reader, "voters"));
  const int k = static_cast<int>(keyword_int(reader, "committee"));
  if (m < 1 || m > kMaxCandidates)
    throw parse_error("candidate count must be in [1, " +
                          std::to_string(kMaxCandidates) + "]",
                      reader.line());
  if (n < 1) throw parse_error("voter count must be positive", reader.line());
  if (k < 1 || k > m) throw parse_error("committee size must satisfy 1 <= k <= m",
                                        reader.line());

  std::vector<std::string> names;
  std::vector<std::string> tokens = reader.require("'names' or 'priority'");
  if (tokens[0] == "names") {
    if (static_cast<int>(tokens.size()) != m + 1)
      throw parse_error("expected " + std::to_string(m) + " candidate names",
                        reader.line());
    names.assign(tokens.begin() + 1, tokens.end());
    tokens = reader.require("'priority'");
  } else {
    for (int c = 0; c < m; ++c) names.push_back(std::string(1, static_cast<char>('a' + c)));
  }

  if (tokens[0] != "priority" || static_cast<int>(tokens.size()) != m + 1)
    throw parse_error("expected 'priority' followed by all candidate names",
                      reader.line());
  std::vector<CandidateId> ranking = parse_candidate_list(tokens, 1, names, reader);
  PriorityOrder priority;
  try {
    priority = PriorityOrder(ranking);
  } catch (const contract_error& e) {
    throw parse_error(e.what(), reader.line());
  }

  std::vector<VoterProfile> voters;
  for (int i = 0; i < n; ++i) {
    tokens = reader.require("'voter " + std::to_string(i) + "'");
    if (tokens.size() != 2 || tokens[0] != "voter" ||
        parse_int(tokens[1], reader, "voter index") != i)
      throw parse_error("expected 'voter " + std::to_string(i) + "'", reader.line());

    VoterProfile voter;
    tokens = reader.require("'pref'");
    if (tokens[0] != "pref" || static_cast<int>(tokens.size()) != m + 1)
      throw parse_error("expected 'pref' followed by all candidate names", reader.line());
    voter.preference = parse_candidate_list(tokens, 1, names, reader);
    {
      std::vector<bool> seen(m, false);
      for (CandidateId c : voter.preference) {
        if (seen[c])
          throw parse_error("preference lists candidate '" + names[c] + "' twice",
                            reader.line());
        seen[c] = true;
      }
    }

    tokens = reader.require("'util'");
    if (tokens[0] != "util" || static_cast<int>(tokens.size()) != m + 1)
      throw parse_error("expected 'util' followed by one rational per candidate",
                        reader.line());
    for (int c = 0; c < m; ++c) voter.utility.push_back(parse_rational(tokens[c + 1], reader));
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (voter.utility[a] == voter.utility[b])
          throw parse_error("duplicate utility value " + voter.utility[a].str() +
                                " (strict preferences require pairwise distinct utilities)",
                            reader.line());
    for (int pos = 0; pos + 1 < m; ++pos)
      if (!(voter.utility[voter.preference[pos]] > voter.utility[voter.preference[pos + 1]]))
        throw parse_error("preference order of voter " + std::to_string(i) +
                              " does not match descending utilities",
                          reader.line());

    tokens = reader.require("'owa'");
    if (tokens[0] != "owa" || static_cast<int>(tokens.size()) != k + 1)
      throw parse_error("expected 'owa' followed by k rationals", reader.line());
    for (int j = 0; j < k; ++j) voter.owa.push_back(parse_rational(tokens[j + 1], reader));
    try {
      j_star(voter.owa);
    } catch (const contract_error& e) {
      throw parse_error(e.what(), reader.line());
    }
    voters.push_back(std::move(voter));
  }

  std::vector<std::string> extra;
  if (reader.next(extra))
    throw parse_error("unexpected trailing content '" + extra[0] + "'", reader.line());

  try {
    return ElectionInstance(k, std::move(voters), std::move(priority), std::move(names));
  } catch (const contract_error& e) {
    throw parse_error(e.what(), reader.line());
  }
}

ElectionInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open instance file '" + path + "'");
  try {
    return parse_instance(in);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what(), 0);
  }
}

std::string serialize_instance(const ElectionInstance& instance) {
  std::ostringstream out;
  const int m = instance.candidate_count();
  out << kFormatTag << " " << kFormatVersion << "\n";
  out << "candidates " << m << "\n";
  out << "voters " << instance.voter_count() << "\n";
  out << "committee " << instance.committee_size() << "\n";
  out << "names";
  for (int c = 0; c < m; ++c) out << " " << instance.name(c);
  out << "\npriority";
  for (CandidateId c : instance.priority().ranking()) out << " " << instance.name(c);
  out << "\n";
  for (int i = 0; i < instance.voter_count(); ++i) {
    const VoterProfile& v = instance.voter(i);
    out << "voter " << i << "\n";
    out << "pref";
    for (CandidateId c : v.preference) out << " " << instance.name(c);
    out << "\nutil";
    for (int c = 0; c < m; ++c) out << " " << v.utility[c].str();
    out << "\nowa";
    for (const Rational& w : v.owa) out << " " << w.str();
    out << "\n";
  }
  return out.str();
}

void save_instance(const ElectionInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write instance file '" + path + "'");
  out << serialize_instance(instance);
}

BallotProfile parse_profile(const ElectionInstance& instance, const std::string& text) {
  std::vector<std::string> fields;
  std::string current;
  for (char ch : text) {
    if (ch == ';') {
      fields.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  fields.push_back(current);
  if (static_cast<int>(fields.size()) != instance.voter_count())
    throw contract_error("expected " + std::to_string(instance.voter_count()) +
                         " ';'-separated ballots, got " + std::to_string(fields.size()));

  BallotProfile profile(instance.voter_count());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    std::string field = fields[i];
    for (char& ch : field)
      if (ch == ',') ch = ' ';
    std::istringstream in(field);
    std::string name;
    while (in >> name) {
      if (name == "-") continue;
      profile[i].add(instance.candidate_by_name(name));
    }
  }
  return profile;
}

std::string profile_to_string(const ElectionInstance& instance,
                              const BallotProfile& profile) {
  std::string out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) out += ";";
    bool first = true;
    for (CandidateId c : profile[i]) {
      if (!first) out += ",";
      out += instance.name(c);
      first = false;
    }
  }
  return out;
}

}  // namespace mwav
