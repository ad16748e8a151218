#include "infothresh/chain_config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace infothresh {

namespace {

using nlohmann::json;

// nlohmann reports parse failures by byte offset; configs are small, so
// rescanning the text for the line and column is cheap.
[[noreturn]] void rethrow_parse_error(const json::parse_error& e,
                                      const std::string& text) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t stop = e.byte == 0 ? 0 : e.byte - 1;
  for (std::size_t i = 0; i < stop && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  std::ostringstream msg;
  msg << "chain config: line " << line << ", column " << column << ": "
      << e.what();
  throw ParseError(msg.str(), line, column);
}

double require_number(const json& node, const std::string& path) {
  if (!node.is_number()) {
    throw ParseError("chain config: " + path + " must be a number");
  }
  return node.get<double>();
}

double probability_field(const json& object, const std::string& key,
                         const std::string& path) {
  if (!object.contains(key)) {
    throw ParseError("chain config: missing key " + path);
  }
  const double value = require_number(object.at(key), path);
  if (!(value >= 0.0) || !(value <= 1.0)) {
    std::ostringstream msg;
    msg << "chain config: " << path << " must lie in [0, 1], got " << value;
    throw ParseError(msg.str());
  }
  return value;
}

}  // namespace

ChainConfig parse_chain_config(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    rethrow_parse_error(e, text);
  }
  if (!document.is_object()) {
    throw ParseError("chain config: top level must be an object");
  }

  ChainConfig config;
  if (document.contains("version")) {
    if (!document.at("version").is_number_integer()) {
      throw ParseError("chain config: version must be an integer");
    }
    config.version = document.at("version").get<int>();
    if (config.version != 1) {
      std::ostringstream msg;
      msg << "chain config: unsupported version " << config.version;
      throw ParseError(msg.str());
    }
  }

  config.initial_prior =
      Probability(probability_field(document, "initial_prior", "initial_prior"));

  if (!document.contains("items") || !document.at("items").is_array()) {
    throw ParseError("chain config: items must be an array");
  }
  const json& items = document.at("items");
  if (items.empty()) {
    throw ParseError("chain config: items must not be empty");
  }

  config.items.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const json& node = items.at(i);
    std::ostringstream prefix;
    prefix << "items[" << i << "]";
    const std::string path = prefix.str();
    if (!node.is_object()) {
      throw ParseError("chain config: " + path + " must be an object");
    }
    if (!node.contains("label") || !node.at("label").is_string()) {
      throw ParseError("chain config: " + path + ".label must be a string");
    }

    EvidenceItem item{
        node.at("label").get<std::string>(),
        ClassifierRates(probability_field(node, "tpr", path + ".tpr"),
                        probability_field(node, "tnr", path + ".tnr")),
        Outcome::positive};
    if (node.contains("outcome")) {
      const json& outcome = node.at("outcome");
      if (!outcome.is_string()) {
        throw ParseError("chain config: " + path + ".outcome must be a string");
      }
      const std::string value = outcome.get<std::string>();
      if (value == "negative") {
        item.outcome = Outcome::negative;
      } else if (value != "positive") {
        throw ParseError("chain config: " + path +
                         ".outcome must be \"positive\" or \"negative\"");
      }
    }
    config.items.push_back(std::move(item));
  }
  return config;
}

ChainConfig load_chain_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open chain config: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("cannot read chain config: " + path);
  }
  return parse_chain_config(buffer.str());
}

}  // namespace infothresh
