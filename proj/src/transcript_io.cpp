#include "relaxbound/transcript_io.hpp"

#include <istream>
#include <ostream>

#include "json.hpp"

namespace relaxbound {

using Json = nlohmann::ordered_json;

namespace {

std::string_view op_tag(OpKind kind) {
  switch (kind) {
    case OpKind::Relax:
      return "relax";
    case OpKind::EdgeQuery:
      return "eq";
    case OpKind::DQuery:
      return "dq";
    case OpKind::WeightQuery:
      return "wq";
  }
  return "?";
}

OpKind parse_op_tag(const std::string& tag) {
  if (tag == "relax") return OpKind::Relax;
  if (tag == "eq") return OpKind::EdgeQuery;
  if (tag == "dq") return OpKind::DQuery;
  if (tag == "wq") return OpKind::WeightQuery;
  throw FormatError("unknown operation tag '" + tag + "'");
}

Answer parse_answer(const std::string& tag) {
  if (tag == "yes") return Answer::Yes;
  if (tag == "no") return Answer::No;
  if (tag == "done") return Answer::Done;
  throw FormatError("unknown answer '" + tag + "'");
}

}  // namespace

std::string format_instance(const WeightAssignment& l) {
  Json doc;
  doc["version"] = 1;
  doc["n"] = l.size();
  doc["s"] = kSource;
  doc["weights"] = std::vector<Weight>(l.row_major().begin(), l.row_major().end());
  return doc.dump() + "\n";
}

WeightAssignment parse_instance(const std::string& text) {
  try {
    const Json doc = Json::parse(text);
    if (doc.at("version").get<int>() != 1) throw FormatError("unsupported instance version");
    if (doc.at("s").get<int>() != kSource) throw FormatError("start vertex must be 0");
    return WeightAssignment(doc.at("n").get<int>(), doc.at("weights").get<std::vector<Weight>>());
  } catch (const Json::exception& e) {
    throw FormatError(std::string("instance: ") + e.what());
  } catch (const InvalidInstance& e) {
    throw FormatError(std::string("instance: ") + e.what());
  }
}

std::string format_step(const Step& step) {
  Json rec;
  rec["t"] = step.t;
  rec["op"] = op_tag(step.op.kind);
  rec["u"] = step.op.u;
  rec["v"] = step.op.v;
  if (step.op.kind == OpKind::WeightQuery) {
    rec["x"] = step.op.x;
    rec["y"] = step.op.y;
  }
  rec["ans"] = to_string(step.answer);
  return rec.dump();
}

Step parse_step(const std::string& line) {
  try {
    const Json rec = Json::parse(line);
    Step step;
    step.t = rec.at("t").get<std::int64_t>();
    step.op.kind = parse_op_tag(rec.at("op").get<std::string>());
    step.op.u = rec.at("u").get<Vertex>();
    step.op.v = rec.at("v").get<Vertex>();
    if (step.op.kind == OpKind::WeightQuery) {
      step.op.x = rec.at("x").get<Vertex>();
      step.op.y = rec.at("y").get<Vertex>();
    }
    step.answer = parse_answer(rec.at("ans").get<std::string>());
    return step;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("transcript record: ") + e.what());
  }
}

void write_transcript(std::ostream& out, const Transcript& transcript) {
  for (const Step& step : transcript) out << format_step(step) << '\n';
}

Transcript read_transcript(std::istream& in) {
  Transcript transcript;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Step step = parse_step(line);
    if (step.t != static_cast<std::int64_t>(transcript.size()) + 1) {
      throw FormatError("transcript step " + std::to_string(step.t) + " out of sequence");
    }
    transcript.push_back(step);
  }
  return transcript;
}

}  // namespace relaxbound
