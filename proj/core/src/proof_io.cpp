#include "grz/proof_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "grz/errors.hpp"
#include "grz/parse.hpp"

namespace grz {

namespace {

using Json = nlohmann::ordered_json;

std::string escape_dot(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

const Json& field(const Json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("proof json: missing \"") + key + "\" in " + where);
  return *it;
}

}  // namespace

System system_from_string(const std::string& s) {
  if (s == "grz-seq") return System::GrzSeq;
  if (s == "grz-seq-cut") return System::GrzSeqCut;
  if (s == "grz-inf") return System::GrzInf;
  if (s == "grz-inf-cut") return System::GrzInfCut;
  throw Error("unknown proof system \"" + s + "\"");
}

RuleTag rule_tag_from_string(const std::string& s) {
  if (s == "ax") return RuleTag::Ax;
  if (s == "ax-bot") return RuleTag::AxBot;
  if (s == "imp-l") return RuleTag::ImpL;
  if (s == "imp-r") return RuleTag::ImpR;
  if (s == "refl") return RuleTag::Refl;
  if (s == "box") return RuleTag::BoxInf;
  if (s == "box-grz") return RuleTag::BoxGrz;
  if (s == "cut") return RuleTag::Cut;
  throw Error("unknown rule tag \"" + s + "\"");
}

std::string proof_to_json(const ProofFile& pf) {
  Json j;
  j["system"] = to_string(pf.system);
  j["root"] = pf.proof.root;
  Json arr = Json::array();
  for (std::size_t i = 0; i < pf.proof.nodes.size(); ++i) {
    const CyclicNode& n = pf.proof.nodes[i];
    Json node;
    node["id"] = i;
    node["sequent"] = print_sequent(n.sequent);
    if (!n.rule) {
      node["hole"] = true;
    } else {
      Json rule;
      rule["tag"] = to_string(n.rule->tag);
      if (n.rule->principal) rule["principal"] = print_formula(n.rule->principal);
      if (n.rule->tag == RuleTag::BoxInf || n.rule->tag == RuleTag::BoxGrz) {
        Json boxpi = Json::array();
        for (FormulaRef f : n.rule->box_context.expanded()) boxpi.push_back(print_formula(f));
        rule["boxpi"] = std::move(boxpi);
      }
      node["rule"] = std::move(rule);
      Json kids = Json::array();
      for (const CyclicChild& c : n.children) {
        Json e;
        e[c.backedge ? "backedge" : "node"] = c.target;
        kids.push_back(std::move(e));
      }
      node["children"] = std::move(kids);
    }
    arr.push_back(std::move(node));
  }
  j["nodes"] = std::move(arr);
  return j.dump(2) + "\n";
}

ProofFile proof_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("proof json: ") + e.what());
  }
  if (!j.is_object()) throw Error("proof json: top level is not an object");

  ProofFile pf;
  const Json& sys = field(j, "system", "the top object");
  if (!sys.is_string()) throw Error("proof json: \"system\" is not a string");
  pf.system = system_from_string(sys.get<std::string>());

  const Json& nodes = field(j, "nodes", "the top object");
  if (!nodes.is_array()) throw Error("proof json: \"nodes\" is not an array");

  std::unordered_map<std::int64_t, int> index_of;
  std::vector<std::int64_t> ids;
  ids.reserve(nodes.size());
  for (const Json& node : nodes) {
    if (!node.is_object()) throw Error("proof json: node entry is not an object");
    const Json& id = field(node, "id", "a node");
    if (!id.is_number_integer()) throw Error("proof json: node id is not an integer");
    std::int64_t key = id.get<std::int64_t>();
    if (!index_of.emplace(key, static_cast<int>(ids.size())).second)
      throw Error("proof json: duplicate node id " + std::to_string(key));
    ids.push_back(key);
  }

  auto resolve = [&](std::int64_t key) {
    auto it = index_of.find(key);
    if (it == index_of.end())
      throw Error("proof json: reference to unknown node id " + std::to_string(key));
    return it->second;
  };

  const Json& root = field(j, "root", "the top object");
  if (!root.is_number_integer()) throw Error("proof json: \"root\" is not an integer");
  pf.proof.root = resolve(root.get<std::int64_t>());

  pf.proof.nodes.reserve(nodes.size());
  for (const Json& node : nodes) {
    CyclicNode out;
    const Json& seq = field(node, "sequent", "a node");
    if (!seq.is_string()) throw Error("proof json: node sequent is not a string");
    out.sequent = parse_sequent(seq.get<std::string>());

    bool hole = node.value("hole", false);
    if (hole) {
      if (node.contains("rule") || (node.contains("children") && !node["children"].empty()))
        throw Error("proof json: a hole cannot carry a rule or children");
      pf.proof.nodes.push_back(std::move(out));
      continue;
    }

    const Json& rule = field(node, "rule", "a node");
    if (!rule.is_object()) throw Error("proof json: node rule is not an object");
    const Json& tag = field(rule, "tag", "a rule");
    if (!tag.is_string()) throw Error("proof json: rule tag is not a string");
    RuleInstance inst;
    inst.tag = rule_tag_from_string(tag.get<std::string>());
    if (rule.contains("principal")) {
      const Json& p = rule["principal"];
      if (!p.is_string()) throw Error("proof json: rule principal is not a string");
      inst.principal = parse_formula(p.get<std::string>());
    }
    if (rule.contains("boxpi")) {
      const Json& pi = rule["boxpi"];
      if (!pi.is_array()) throw Error("proof json: rule boxpi is not an array");
      for (const Json& f : pi) {
        if (!f.is_string()) throw Error("proof json: boxpi entry is not a string");
        inst.box_context = inst.box_context.plus(parse_formula(f.get<std::string>()), 1);
      }
    }
    out.rule = std::move(inst);

    if (node.contains("children")) {
      const Json& kids = node["children"];
      if (!kids.is_array()) throw Error("proof json: node children is not an array");
      for (const Json& e : kids) {
        if (!e.is_object()) throw Error("proof json: child entry is not an object");
        bool back = e.contains("backedge");
        bool tree = e.contains("node");
        if (back == tree)
          throw Error("proof json: child entry needs exactly one of \"node\" or \"backedge\"");
        const Json& target = back ? e["backedge"] : e["node"];
        if (!target.is_number_integer())
          throw Error("proof json: child reference is not an integer");
        out.children.push_back(CyclicChild{back, resolve(target.get<std::int64_t>())});
      }
    }
    pf.proof.nodes.push_back(std::move(out));
  }
  return pf;
}

void save_proof(const std::string& path, const ProofFile& pf) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << proof_to_json(pf);
  if (!out) throw Error("failed while writing " + path);
}

ProofFile load_proof(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return proof_from_json(buf.str());
}

std::string proof_to_dot(const ProofFile& pf) {
  std::ostringstream out;
  out << "digraph proof {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < pf.proof.nodes.size(); ++i) {
    const CyclicNode& n = pf.proof.nodes[i];
    std::string label = escape_dot(print_sequent(n.sequent));
    label += "\\n";
    if (n.rule) {
      std::string ruletext = to_string(n.rule->tag);
      if (n.rule->principal) {
        ruletext += " ";
        ruletext += print_formula(n.rule->principal);
      }
      label += escape_dot(ruletext);
    } else {
      label += "(open)";
    }
    out << "  n" << i << " [label=\"" << label << "\"";
    if (static_cast<int>(i) == pf.proof.root) out << ", peripheries=2";
    out << "];\n";
  }
  for (std::size_t i = 0; i < pf.proof.nodes.size(); ++i) {
    const CyclicNode& n = pf.proof.nodes[i];
    for (std::size_t k = 0; k < n.children.size(); ++k) {
      const CyclicChild& c = n.children[k];
      out << "  n" << i << " -> n" << c.target;
      std::vector<std::string> attrs;
      if (c.backedge) attrs.push_back("style=dashed");
      if (n.children.size() > 1) attrs.push_back("label=\"" + std::to_string(k) + "\"");
      if (!attrs.empty()) {
        out << " [" << attrs[0];
        for (std::size_t a = 1; a < attrs.size(); ++a) out << ", " << attrs[a];
        out << "]";
      }
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

int add_fragment(CyclicProof& out, const Fragment& f) {
  int idx = static_cast<int>(out.nodes.size());
  CyclicNode node;
  node.sequent = f.sequent;
  if (!f.is_hole()) node.rule = f.rule;
  out.nodes.push_back(std::move(node));
  for (const Fragment& child : f.children) {
    int ci = add_fragment(out, child);
    out.nodes[static_cast<std::size_t>(idx)].children.push_back(CyclicChild{false, ci});
  }
  return idx;
}

}  // namespace

CyclicProof fragment_to_cyclic(const Fragment& f) {
  CyclicProof out;
  out.root = add_fragment(out, f);
  return out;
}

}  // namespace grz
