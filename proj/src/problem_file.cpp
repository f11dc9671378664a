#include "maxplus/problem_file.hpp"

#include <cctype>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

using nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

bool is_identifier(std::string_view s) {
  if (s.empty() || (std::isalpha(static_cast<unsigned char>(s.front())) == 0 && s.front() != '_')) return false;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)) == 0 && c != '_') return false;
  }
  return true;
}

std::string entry_text(const ordered_json& value, const std::string& where) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  throw ParseError(where + ": entry must be a string or an integer, got " + value.dump());
}

ProblemFile::Entries read_matrix(const ordered_json& value, const std::string& name, std::size_t n) {
  if (!value.is_array() || value.size() != n) {
    throw ParseError("matrix " + name + " must be an array of " + std::to_string(n) + " rows");
  }
  ProblemFile::Entries rows;
  for (std::size_t i = 0; i < n; ++i) {
    const ordered_json& row = value[i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError("matrix " + name + " row " + std::to_string(i + 1) + " must hold " + std::to_string(n) +
                       " entries");
    }
    std::vector<std::string> cells;
    for (std::size_t j = 0; j < n; ++j) {
      cells.push_back(entry_text(row[j], name + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"));
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON problem file", line, column);
  }
  if (!doc.is_object()) throw ParseError("problem file must be a JSON object");

  ProblemFile problem;
  if (!doc.contains("n") || !doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0) {
    throw ParseError("\"n\" must be a positive integer");
  }
  problem.n = doc["n"].get<std::size_t>();

  for (const auto& [key, value] : doc.items()) {
    if (key == "n" || key == "params") continue;
    bool known = false;
    for (std::string_view name : ProblemFile::kMatrixNames) known = known || key == name;
    if (!known) throw ParseError("unknown key \"" + key + "\"");
  }

  if (doc.contains("params")) {
    const ordered_json& params = doc["params"];
    if (!params.is_object()) throw ParseError("\"params\" must be an object");
    for (const auto& [name, value] : params.items()) {
      if (!is_identifier(name)) throw ParseError("parameter name '" + name + "' is not an identifier");
      problem.params[name] = entry_text(value, "params." + name);
    }
  }

  for (std::string_view name : ProblemFile::kMatrixNames) {
    const std::string key(name);
    if (doc.contains(key)) {
      problem.matrices[key] = read_matrix(doc[key], key, problem.n);
    } else {
      problem.matrices[key] = ProblemFile::Entries(problem.n, std::vector<std::string>(problem.n, "-inf"));
    }
  }
  return problem;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

std::string serialize_problem(const ProblemFile& problem) {
  ordered_json doc;
  doc["n"] = problem.n;
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : problem.params) params[name] = value;
  doc["params"] = params;
  for (std::string_view name : ProblemFile::kMatrixNames) {
    auto it = problem.matrices.find(name);
    if (it != problem.matrices.end()) doc[std::string(name)] = it->second;
  }
  return doc.dump(2) + "\n";
}

PtegSystem instantiate(const ProblemFile& problem, const std::map<std::string, std::string>& overrides) {
  std::map<std::string, std::string> bound = problem.params;
  for (const auto& [name, value] : overrides) bound[name] = value;

  auto build = [&](std::string_view name) {
    Matrix m(problem.n, problem.n);
    auto it = problem.matrices.find(name);
    if (it == problem.matrices.end()) return m;
    for (std::size_t i = 0; i < problem.n; ++i) {
      for (std::size_t j = 0; j < problem.n; ++j) {
        const std::string where =
            std::string(name) + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
        std::string text = it->second.at(i).at(j);
        if (is_identifier(text) && text != "inf") {
          auto param = bound.find(text);
          if (param == bound.end()) throw ParseError(where + ": unbound parameter '" + text + "'");
          text = param->second;
        }
        try {
          m(i, j) = Scalar::parse(text);
        } catch (const ParseError& e) {
          throw ParseError(where + ": " + e.what());
        }
        if (m(i, j).is_pos_inf()) throw InvalidInput(where + ": +inf is not a valid problem entry");
      }
    }
    return m;
  };

  return PtegSystem(build("A"), build("L"), build("C"), build("Rtilde"));
}

}  // namespace maxplus
