#pragma once

#include "evoloop/json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace evoloop {

enum class ArtifactKind { knowledge, tool, validation };

const char* kind_name(ArtifactKind k);
ArtifactKind kind_from_name(const std::string& name);

// True for a non-empty, <=128 char identifier of lowercase words (letters or
// digits) joined by single underscores.
bool valid_identifier(const std::string& name);

struct ArtifactId {
  ArtifactKind kind = ArtifactKind::knowledge;
  std::string name;

  std::string str() const { return std::string(kind_name(kind)) + "/" + name; }
  static ArtifactId parse(const std::string& s);

  friend bool operator==(const ArtifactId&, const ArtifactId&) = default;
  friend auto operator<=>(const ArtifactId& a, const ArtifactId& b) {
    return a.str() <=> b.str();
  }
};

struct ToolParameter {
  std::string name;
  std::string type_tag;  // string | int | float | bool | object | array
  bool required = true;
};

struct ToolSpec {
  std::string description;
  std::vector<ToolParameter> parameters;
  std::string entrypoint;                      // script text run by the sandbox
  std::vector<std::string> attached_checks;    // validation artifact id strings

  Json to_json() const;
  static ToolSpec from_json(const Json& j);
};

struct KnowledgeDoc {
  std::string doc_type;  // fact | schema | workflow | skill | exemplar
  std::string title;
  Json body;             // text or structured document
  std::vector<std::string> triggers;
  std::map<std::string, std::string> frontmatter;

  Json to_json() const;
  static KnowledgeDoc from_json(const Json& j);

  // Text form used for context rendering and also asserted by tests.
  std::string body_text() const;
};

struct ExecutionLimits {
  std::int64_t wall_time_ms = 2000;
  std::int64_t max_stdout_bytes = 65536;
  std::vector<std::string> env_allowlist;

  Json to_json() const;
  static ExecutionLimits from_json(const Json& j);
};

struct Expectation {
  std::string kind;  // success_flag_true | exact_match | contains
  Json value;        // exact_match payload
  std::string substring;

  static Expectation success_flag_true() { return {"success_flag_true", Json(), ""}; }
  static Expectation exact_match(Json v) { return {"exact_match", std::move(v), ""}; }
  static Expectation contains(std::string s) { return {"contains", Json(), std::move(s)}; }

  Json to_json() const;
  static Expectation from_json(const Json& j);
};

struct ValidationCase {
  std::string check_kind;  // syntax | schema | runtime | regression
  std::vector<ArtifactId> targets;
  Json fixture_input;      // required for runtime/regression
  Expectation expectation = Expectation::success_flag_true();
  ExecutionLimits limits;

  Json to_json() const;
  static ValidationCase from_json(const Json& j);
};

// A kind-tagged payload; exactly the variant matching `kind` is meaningful.
struct Payload {
  ArtifactKind kind = ArtifactKind::knowledge;
  ToolSpec tool;
  KnowledgeDoc knowledge;
  ValidationCase validation;

  static Payload of(ToolSpec t);
  static Payload of(KnowledgeDoc d);
  static Payload of(ValidationCase v);

  Json to_json() const;
  static Payload from_json(ArtifactKind kind, const Json& j);
};

// Validates the payload's type invariants; throws Error(InvalidPayload).
void validate_payload(const Payload& payload);

struct VersionedArtifact {
  ArtifactId id;
  std::int64_t version = 0;
  std::string content_digest;
  Payload payload;
  std::string status;  // active | pruned
  std::int64_t provenance_ref = -1;  // audit record offset; -1 when ungated
  std::int64_t created_episode = 0;

  bool active() const { return status == "active"; }
};

// Skill frontmatter block: lines of `key: value` between `---` delimiters,
// triggers comma-separated, body after the closing delimiter.
std::string render_skill_text(const KnowledgeDoc& doc);
bool parse_skill_frontmatter(const std::string& text,
                             std::map<std::string, std::string>& keys_out,
                             std::string& body_out);

}  // namespace evoloop
