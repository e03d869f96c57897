#include "evoloop/artifacts.hpp"

#include "evoloop/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace evoloop {

namespace {

const std::set<std::string>& type_tags() {
  static const std::set<std::string> tags = {"string", "int", "float", "bool", "object", "array"};
  return tags;
}

const std::set<std::string>& doc_types() {
  static const std::set<std::string> types = {"fact", "schema", "workflow", "skill", "exemplar"};
  return types;
}

const std::set<std::string>& check_kinds() {
  static const std::set<std::string> kinds = {"syntax", "schema", "runtime", "regression"};
  return kinds;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

const char* kind_name(ArtifactKind k) {
  switch (k) {
    case ArtifactKind::knowledge: return "knowledge";
    case ArtifactKind::tool: return "tool";
    case ArtifactKind::validation: return "validation";
  }
  return "knowledge";
}

ArtifactKind kind_from_name(const std::string& name) {
  if (name == "knowledge") return ArtifactKind::knowledge;
  if (name == "tool") return ArtifactKind::tool;
  if (name == "validation") return ArtifactKind::validation;
  raise(Errc::InvalidPayload, "unknown artifact kind '" + name + "'");
}

bool valid_identifier(const std::string& name) {
  if (name.empty() || name.size() > 128) return false;
  bool prev_underscore = true;  // leading underscore is invalid
  for (char c : name) {
    if (c == '_') {
      if (prev_underscore) return false;
      prev_underscore = true;
    } else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      prev_underscore = false;
    } else {
      return false;
    }
  }
  return !prev_underscore;  // trailing underscore is invalid
}

ArtifactId ArtifactId::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) raise(Errc::InvalidPayload, "artifact id missing '/': " + s);
  return ArtifactId{kind_from_name(s.substr(0, slash)), s.substr(slash + 1)};
}

Json ToolSpec::to_json() const {
  Json params = Json::array();
  for (const auto& p : parameters) {
    params.push_back({{"name", p.name}, {"required", p.required}, {"type_tag", p.type_tag}});
  }
  return Json{{"attached_checks", attached_checks},
              {"description", description},
              {"entrypoint", entrypoint},
              {"parameters", params}};
}

ToolSpec ToolSpec::from_json(const Json& j) {
  ToolSpec t;
  t.description = j.at("description").get<std::string>();
  t.entrypoint = j.at("entrypoint").get<std::string>();
  for (const auto& p : j.at("parameters")) {
    t.parameters.push_back({p.at("name").get<std::string>(), p.at("type_tag").get<std::string>(),
                            p.at("required").get<bool>()});
  }
  if (j.contains("attached_checks")) {
    t.attached_checks = j.at("attached_checks").get<std::vector<std::string>>();
  }
  return t;
}

Json KnowledgeDoc::to_json() const {
  Json fm = Json::object();
  for (const auto& [k, v] : frontmatter) fm[k] = v;
  return Json{{"body", body},
              {"doc_type", doc_type},
              {"frontmatter", fm},
              {"title", title},
              {"triggers", triggers}};
}

KnowledgeDoc KnowledgeDoc::from_json(const Json& j) {
  KnowledgeDoc d;
  d.doc_type = j.at("doc_type").get<std::string>();
  d.title = j.at("title").get<std::string>();
  d.body = j.at("body");
  d.triggers = j.at("triggers").get<std::vector<std::string>>();
  if (j.contains("frontmatter")) {
    for (const auto& [k, v] : j.at("frontmatter").items()) {
      d.frontmatter[k] = v.get<std::string>();
    }
  }
  return d;
}

std::string KnowledgeDoc::body_text() const {
  if (doc_type == "skill") return render_skill_text(*this);
  return body.is_string() ? body.get<std::string>() : canonical(body);
}

Json ExecutionLimits::to_json() const {
  return Json{{"env_allowlist", env_allowlist},
              {"max_stdout_bytes", max_stdout_bytes},
              {"wall_time_ms", wall_time_ms}};
}

ExecutionLimits ExecutionLimits::from_json(const Json& j) {
  ExecutionLimits l;
  if (j.contains("wall_time_ms")) l.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
  if (j.contains("max_stdout_bytes")) l.max_stdout_bytes = j.at("max_stdout_bytes").get<std::int64_t>();
  if (j.contains("env_allowlist")) l.env_allowlist = j.at("env_allowlist").get<std::vector<std::string>>();
  return l;
}

Json Expectation::to_json() const {
  Json j{{"kind", kind}};
  if (kind == "exact_match") j["value"] = value;
  if (kind == "contains") j["substring"] = substring;
  return j;
}

Expectation Expectation::from_json(const Json& j) {
  Expectation e;
  e.kind = j.at("kind").get<std::string>();
  if (j.contains("value")) e.value = j.at("value");
  if (j.contains("substring")) e.substring = j.at("substring").get<std::string>();
  return e;
}

Json ValidationCase::to_json() const {
  Json t = Json::array();
  for (const auto& id : targets) t.push_back(id.str());
  return Json{{"check_kind", check_kind},
              {"expectation", expectation.to_json()},
              {"fixture_input", fixture_input},
              {"limits", limits.to_json()},
              {"targets", t}};
}

ValidationCase ValidationCase::from_json(const Json& j) {
  ValidationCase c;
  c.check_kind = j.at("check_kind").get<std::string>();
  for (const auto& t : j.at("targets")) c.targets.push_back(ArtifactId::parse(t.get<std::string>()));
  c.fixture_input = j.value("fixture_input", Json());
  c.expectation = Expectation::from_json(j.at("expectation"));
  if (j.contains("limits")) c.limits = ExecutionLimits::from_json(j.at("limits"));
  return c;
}

Payload Payload::of(ToolSpec t) {
  Payload p;
  p.kind = ArtifactKind::tool;
  p.tool = std::move(t);
  return p;
}

Payload Payload::of(KnowledgeDoc d) {
  Payload p;
  p.kind = ArtifactKind::knowledge;
  p.knowledge = std::move(d);
  return p;
}

Payload Payload::of(ValidationCase v) {
  Payload p;
  p.kind = ArtifactKind::validation;
  p.validation = std::move(v);
  return p;
}

Json Payload::to_json() const {
  switch (kind) {
    case ArtifactKind::tool: return tool.to_json();
    case ArtifactKind::knowledge: return knowledge.to_json();
    case ArtifactKind::validation: return validation.to_json();
  }
  return Json();
}

Payload Payload::from_json(ArtifactKind kind, const Json& j) {
  Payload p;
  p.kind = kind;
  switch (kind) {
    case ArtifactKind::tool: p.tool = ToolSpec::from_json(j); break;
    case ArtifactKind::knowledge: p.knowledge = KnowledgeDoc::from_json(j); break;
    case ArtifactKind::validation: p.validation = ValidationCase::from_json(j); break;
  }
  return p;
}

void validate_payload(const Payload& payload) {
  switch (payload.kind) {
    case ArtifactKind::tool: {
      const ToolSpec& t = payload.tool;
      if (t.entrypoint.empty()) raise(Errc::InvalidPayload, "tool entrypoint is empty");
      std::set<std::string> names;
      for (const auto& p : t.parameters) {
        if (!valid_identifier(p.name)) {
          raise(Errc::InvalidPayload, "bad parameter name '" + p.name + "'");
        }
        if (!type_tags().count(p.type_tag)) {
          raise(Errc::InvalidPayload, "unknown type_tag '" + p.type_tag + "'");
        }
        if (!names.insert(p.name).second) {
          raise(Errc::InvalidPayload, "duplicate parameter '" + p.name + "'");
        }
      }
      break;
    }
    case ArtifactKind::knowledge: {
      const KnowledgeDoc& d = payload.knowledge;
      if (!doc_types().count(d.doc_type)) {
        raise(Errc::InvalidPayload, "unknown doc_type '" + d.doc_type + "'");
      }
      if (d.doc_type == "skill") {
        for (const char* key : {"name", "type", "triggers", "version"}) {
          if (!d.frontmatter.count(key)) {
            raise(Errc::InvalidPayload, std::string("skill frontmatter missing '") + key + "'");
          }
        }
      }
      if ((d.doc_type == "skill" || d.doc_type == "workflow") && d.triggers.empty()) {
        raise(Errc::InvalidPayload, d.doc_type + " document has no triggers");
      }
      for (const auto& t : d.triggers) {
        if (t.empty() || std::any_of(t.begin(), t.end(), [](char c) { return c >= 'A' && c <= 'Z'; })) {
          raise(Errc::InvalidPayload, "trigger keywords must be lowercase and non-empty");
        }
      }
      break;
    }
    case ArtifactKind::validation: {
      const ValidationCase& c = payload.validation;
      if (!check_kinds().count(c.check_kind)) {
        raise(Errc::InvalidPayload, "unknown check_kind '" + c.check_kind + "'");
      }
      if (c.check_kind == "runtime" || c.check_kind == "regression") {
        if (c.fixture_input.is_null()) {
          raise(Errc::InvalidPayload, c.check_kind + " case requires a fixture_input");
        }
      }
      if (c.check_kind == "regression" && c.expectation.kind == "success_flag_true") {
        // A regression must pin behaviour, not mere liveness.
        raise(Errc::InvalidPayload, "regression case needs a non-trivial expectation");
      }
      if (c.limits.wall_time_ms <= 0 || c.limits.max_stdout_bytes <= 0) {
        raise(Errc::InvalidPayload, "execution limits must be strictly positive");
      }
      break;
    }
  }
}

std::string render_skill_text(const KnowledgeDoc& doc) {
  std::ostringstream out;
  out << "---\n";
  for (const char* key : {"name", "type", "triggers", "version"}) {
    auto it = doc.frontmatter.find(key);
    out << key << ": " << (it != doc.frontmatter.end() ? it->second : "") << "\n";
  }
  out << "---\n";
  out << (doc.body.is_string() ? doc.body.get<std::string>() : canonical(doc.body));
  return out.str();
}

bool parse_skill_frontmatter(const std::string& text,
                             std::map<std::string, std::string>& keys_out,
                             std::string& body_out) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || trim(line) != "---") return false;
  keys_out.clear();
  while (std::getline(in, line)) {
    if (trim(line) == "---") {
      std::ostringstream body;
      bool first = true;
      while (std::getline(in, line)) {
        if (!first) body << "\n";
        body << line;
        first = false;
      }
      body_out = body.str();
      return true;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) return false;
    keys_out[trim(line.substr(0, colon))] = trim(line.substr(colon + 1));
  }
  return false;  // unterminated block
}

}  // namespace evoloop
