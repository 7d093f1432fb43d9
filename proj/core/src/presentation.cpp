#include "qbundle/presentation.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "bundled_presentations.hpp"

namespace qbundle {

Presentation::Presentation(std::string name, AlgebraParams params, AlphabetPtr alphabet,
                           std::vector<NamedRelation> relations, RewriteSystem system)
    : name_(std::move(name)),
      params_(std::move(params)),
      alphabet_(std::move(alphabet)),
      relations_(std::move(relations)),
      system_(std::move(system)) {}

SymbolTable Presentation::symbols() const { return {{"p", params_.p}, {"q", params_.q}}; }

NCPoly Presentation::parse(std::string_view text) const { return parse_poly(text, alphabet_, symbols()); }

std::shared_ptr<const Presentation> Presentation::renamed(const std::string& name,
                                                          const std::map<std::string, std::string>& renames) const {
  auto alphabet = alphabet_->renamed(renames);
  std::vector<NamedRelation> relations;
  for (const auto& r : relations_) relations.push_back({r.name, r.poly.rebased(alphabet)});
  RewriteSystem system(alphabet, system_.degree_cap());
  for (const auto& rule : system_.rules()) system.add_rule({rule.lhs, rule.rhs.rebased(alphabet)});
  system.mark_completed(system_.completed());
  return std::make_shared<Presentation>(name, params_, alphabet, std::move(relations), std::move(system));
}

namespace {

std::vector<std::string> string_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<std::string>>();
}

}  // namespace

PresentationPtr load_presentation(const nlohmann::json& doc, const std::optional<AlgebraParams>& params,
                                  int degree_cap, const SymbolTable& symbol_overrides) {
  const std::string name = doc.value("name", std::string("custom"));
  const auto letters = string_list(doc, "letters");
  auto order = string_list(doc, "order");
  if (order.empty()) order = letters;
  if (!letters.empty() && std::set<std::string>(letters.begin(), letters.end()) !=
                              std::set<std::string>(order.begin(), order.end()))
    throw std::invalid_argument("presentation '" + name + "': \"order\" must list exactly the declared letters");

  std::vector<std::pair<std::string, std::string>> pairs;
  if (doc.contains("star_pairs"))
    for (const auto& p : doc.at("star_pairs")) pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  std::map<std::string, int> grading;
  if (doc.contains("grading"))
    for (const auto& [k, v] : doc.at("grading").items()) grading[k] = v.get<int>();

  AlgebraParams ap;
  if (doc.contains("params")) {
    const auto& pj = doc.at("params");
    if (pj.contains("p")) ap.p = parse_scalar(pj.at("p").get<std::string>());
    if (pj.contains("q")) ap.q = parse_scalar(pj.at("q").get<std::string>());
  }
  if (params) ap = *params;
  ap.validate();

  auto alphabet = Alphabet::create(order, pairs, grading);
  SymbolTable symbols{{"p", ap.p}, {"q", ap.q}};
  for (const auto& [k, v] : symbol_overrides) symbols[k] = v;

  std::vector<NamedRelation> relations;
  RewriteSystem system(alphabet, degree_cap);
  std::size_t index = 0;
  for (const auto& rj : doc.at("rules")) {
    ++index;
    const std::string rname = rj.value("name", "rule" + std::to_string(index));
    // Either an explicit orientation {lhs, rhs} or a bare relation oriented here.
    RewriteRule rule = rj.contains("relation")
                           ? RewriteSystem::orient(parse_poly(rj.at("relation").get<std::string>(), alphabet, symbols))
                           : RewriteRule{parse_word(rj.at("lhs").get<std::string>(), alphabet),
                                         parse_poly(rj.at("rhs").get<std::string>(), alphabet, symbols)};
    relations.push_back({rname, rj.contains("relation") ? parse_poly(rj.at("relation").get<std::string>(), alphabet, symbols)
                                                        : rule.relation()});
    system.add_rule(std::move(rule));
  }
  return std::make_shared<Presentation>(name, ap, alphabet, std::move(relations), complete(system, degree_cap));
}

PresentationPtr load_presentation_file(const std::filesystem::path& path, const std::optional<AlgebraParams>& params,
                                       int degree_cap) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open presentation file " + path.string());
  return load_presentation(nlohmann::json::parse(in), params, degree_cap);
}

std::vector<std::string> builtin_presentation_names() {
  std::vector<std::string> out;
  for (const auto& d : bundled::documents) out.emplace_back(d.name);
  return out;
}

const nlohmann::json& builtin_document(std::string_view name) {
  static const auto parsed = [] {
    std::map<std::string, nlohmann::json, std::less<>> m;
    for (const auto& d : bundled::documents) m.emplace(d.name, nlohmann::json::parse(d.text));
    return m;
  }();
  auto it = parsed.find(name);
  if (it == parsed.end()) throw std::invalid_argument("unknown algebra '" + std::string(name) + "'");
  return it->second;
}

PresentationPtr builtin_presentation(std::string_view name, const AlgebraParams& params, int degree_cap) {
  using Key = std::tuple<std::string, std::string, std::string, int>;
  static std::mutex mutex;
  static std::map<Key, PresentationPtr> cache;
  const Key key{std::string(name), params.p.get_str(), params.q.get_str(), degree_cap};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  PresentationPtr built;
  if (name == "disc-p") {
    built = load_presentation(builtin_document("disc"), params, degree_cap, {{"q", params.p}});
  } else {
    built = load_presentation(builtin_document(name), params, degree_cap);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(key, built).first->second;
}

std::shared_ptr<const BundleAlgebras> BundleAlgebras::get(const AlgebraParams& params, int degree_cap) {
  using Key = std::tuple<std::string, std::string, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const BundleAlgebras>> cache;
  const Key key{params.p.get_str(), params.q.get_str(), degree_cap};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto out = std::make_shared<BundleAlgebras>();
  out->params = params;
  out->degree_cap = degree_cap;
  out->disc_p = builtin_presentation("disc-p", params, degree_cap)->renamed("disc-p", {});
  out->disc_q = builtin_presentation("disc", params, degree_cap)->renamed("disc-q", {{"x", "y"}, {"x*", "y*"}});
  out->circle = builtin_presentation("circle", params, degree_cap);
  out->sphere = builtin_presentation("sphere", params, degree_cap);
  out->s3 = builtin_presentation("s3", params, degree_cap);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace qbundle
