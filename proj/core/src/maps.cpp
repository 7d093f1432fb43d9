#include "qbundle/maps.hpp"

#include <mutex>
#include <optional>
#include <tuple>

#include "qbundle/text.hpp"

namespace qbundle {

namespace {

// Fills the image table: given letters first, then adjoints of given letters.
template <class T, class Star>
std::vector<T> image_table(const Alphabet& alphabet, const std::map<std::string, T>& given, Star star_of,
                           const std::string& map_name) {
  std::vector<std::optional<T>> table(alphabet.size());
  for (const auto& [name, img] : given) table.at(alphabet.id(name)) = img;
  for (std::size_t l = 0; l < alphabet.size(); ++l) {
    if (table[l]) continue;
    const auto s = alphabet.star(static_cast<LetterId>(l));
    if (s != l && table[s]) table[l] = star_of(*table[s]);
  }
  std::vector<T> out;
  for (std::size_t l = 0; l < alphabet.size(); ++l) {
    if (!table[l])
      throw std::invalid_argument("map '" + map_name + "' has no image for letter '" +
                                  alphabet.name(static_cast<LetterId>(l)) + "'");
    out.push_back(*table[l]);
  }
  return out;
}

}  // namespace

AlgebraMap::AlgebraMap(std::string name, PresentationPtr source, PresentationPtr target,
                       const std::map<std::string, NCPoly>& images)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)) {
  images_ = image_table(*source_->alphabet(), images, [](const NCPoly& f) { return f.star(); }, name_);
  for (auto& img : images_) img = target_->nf(img.rebased(target_->alphabet()));
}

AlgebraMap AlgebraMap::from_text(std::string name, PresentationPtr source, PresentationPtr target,
                                 const std::map<std::string, std::string>& images) {
  std::map<std::string, NCPoly> parsed;
  for (const auto& [k, v] : images) parsed.emplace(k, target->parse(v));
  return AlgebraMap(std::move(name), std::move(source), std::move(target), parsed);
}

NCPoly AlgebraMap::apply(const Word& w) const {
  NCPoly acc = target_->one();
  for (std::size_t i = 0; i < w.size(); ++i) acc = target_->nf(acc * images_[w[i]]);
  return acc;
}

NCPoly AlgebraMap::apply(const NCPoly& f) const {
  if (!f.alphabet()->same_as(*source_->alphabet())) throw AlphabetMismatch("map '" + name_ + "': foreign input");
  NCPoly out = target_->zero();
  for (const auto& [w, c] : f.terms()) out += c * apply(w);
  return out;
}

std::vector<std::pair<std::string, NCPoly>> AlgebraMap::relation_images() const {
  std::vector<std::pair<std::string, NCPoly>> out;
  for (const auto& r : source_->relations()) out.emplace_back(r.name, apply(r.poly));
  return out;
}

ChartMap::ChartMap(std::string name, PresentationPtr source, PresentationPtr target,
                   const std::map<std::string, HTensor>& images)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)) {
  images_ = image_table(*source_->alphabet(), images, [](const HTensor& t) { return t.star(); }, name_);
  for (auto& img : images_) img = img.reduced(*target_);
}

ChartMap ChartMap::from_text(std::string name, PresentationPtr source, PresentationPtr target,
                             const std::map<std::string, std::string>& images) {
  const auto u1 = builtin_presentation("hopf-u1");
  std::map<std::string, HTensor> parsed;
  for (const auto& [k, v] : images) {
    HTensor t(target->alphabet());
    for (const auto& [l, r] : parse_tensor(v, target->alphabet(), u1->alphabet(), target->symbols()))
      for (const auto h = from_poly(r, *u1); const auto& [n, c] : h.terms()) t.add(n, c * l);
    parsed.emplace(k, std::move(t));
  }
  return ChartMap(std::move(name), std::move(source), std::move(target), parsed);
}

ChartMap ChartMap::from_algebra_map(const AlgebraMap& pi) {
  std::map<std::string, HTensor> images;
  const auto& alphabet = *pi.source()->alphabet();
  for (std::size_t l = 0; l < alphabet.size(); ++l)
    images.emplace(alphabet.name(static_cast<LetterId>(l)), HTensor::pure(pi.image(static_cast<LetterId>(l)), 0));
  return ChartMap(pi.name() + " (x) 1", pi.source(), pi.target(), images);
}

HTensor ChartMap::apply(const Word& w) const {
  HTensor acc = HTensor::pure(target_->one(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) acc = (acc * images_[w[i]]).reduced(*target_);
  return acc;
}

HTensor ChartMap::apply(const NCPoly& f) const {
  if (!f.alphabet()->same_as(*source_->alphabet())) throw AlphabetMismatch("map '" + name_ + "': foreign input");
  HTensor out(target_->alphabet());
  for (const auto& [w, c] : f.terms()) out += c * apply(w);
  return out;
}

std::vector<std::pair<std::string, HTensor>> ChartMap::relation_images() const {
  std::vector<std::pair<std::string, HTensor>> out;
  for (const auto& r : source_->relations()) out.emplace_back(r.name, apply(r.poly));
  return out;
}

std::shared_ptr<const StandardMaps> StandardMaps::get(const AlgebraParams& params, int degree_cap) {
  using Key = std::tuple<std::string, std::string, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const StandardMaps>> cache;
  const Key key{params.p.get_str(), params.q.get_str(), degree_cap};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const auto alg = BundleAlgebras::get(params, degree_cap);
  auto out = std::make_shared<const StandardMaps>(StandardMaps{
      alg,
      builtin_presentation("hopf-u1", params, degree_cap),
      AlgebraMap::from_text("iota", alg->sphere, alg->s3, {{"f_0", "b b*"}, {"f_1", "b a"}}),
      AlgebraMap::from_text("pi_p", alg->sphere, alg->disc_p, {{"f_0", "x x*"}, {"f_1", "x"}}),
      AlgebraMap::from_text("pi_q", alg->sphere, alg->disc_q, {{"f_0", "1"}, {"f_1", "y"}}),
      AlgebraMap::from_text("boundary_p", alg->disc_p, alg->circle, {{"x", "u"}}),
      AlgebraMap::from_text("boundary_q", alg->disc_q, alg->circle, {{"y", "u"}}),
      ChartMap::from_text("chi_p", alg->s3, alg->disc_p, {{"a", "1 (x) u"}, {"b", "x (x) u*"}}),
      ChartMap::from_text("chi_q", alg->s3, alg->disc_q, {{"a", "y (x) u"}, {"b", "1 (x) u*"}}),
  });
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace qbundle
