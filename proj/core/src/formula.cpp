#include "grz/formula.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "grz/errors.hpp"

namespace grz {

namespace {

std::size_t mix(std::size_t a, std::size_t b) {
  // boost::hash_combine flavour
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

}  // namespace

class FormulaArena {
public:
  static FormulaArena& instance() {
    static FormulaArena arena;
    return arena;
  }

  const Formula* bottom() { return &bottom_; }

  const Formula* atom(std::string_view name) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = atoms_.find(std::string(name));
    if (it != atoms_.end()) return it->second;
    std::unique_ptr<Formula> f(new Formula());
    f->kind_ = Connective::Atom;
    f->name_ = std::string(name);
    f->hash_ = mix(1, std::hash<std::string>{}(f->name_));
    f->size_ = 1;
    f->modal_depth_ = 0;
    const Formula* p = f.get();
    atoms_.emplace(f->name_, p);
    pool_.push_back(std::move(f));
    return p;
  }

  const Formula* implies(const Formula* a, const Formula* b) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(a, b);
    auto it = imps_.find(key);
    if (it != imps_.end()) return it->second;
    std::unique_ptr<Formula> f(new Formula());
    f->kind_ = Connective::Implies;
    f->left_ = a;
    f->right_ = b;
    f->hash_ = mix(2, mix(a->hash(), b->hash()));
    f->size_ = 1 + a->size() + b->size();
    f->modal_depth_ = std::max(a->modal_depth(), b->modal_depth());
    const Formula* p = f.get();
    imps_.emplace(key, p);
    pool_.push_back(std::move(f));
    return p;
  }

  const Formula* box(const Formula* a) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = boxes_.find(a);
    if (it != boxes_.end()) return it->second;
    std::unique_ptr<Formula> f(new Formula());
    f->kind_ = Connective::Box;
    f->left_ = a;
    f->hash_ = mix(3, a->hash());
    f->size_ = 1 + a->size();
    f->modal_depth_ = 1 + a->modal_depth();
    const Formula* p = f.get();
    boxes_.emplace(a, p);
    pool_.push_back(std::move(f));
    return p;
  }

private:
  FormulaArena() {
    bottom_.kind_ = Connective::Bottom;
    bottom_.hash_ = mix(0, 0);
    bottom_.size_ = 1;
    bottom_.modal_depth_ = 0;
  }

  struct PairHash {
    std::size_t operator()(const std::pair<const Formula*, const Formula*>& p) const {
      return mix(std::hash<const void*>{}(p.first), std::hash<const void*>{}(p.second));
    }
  };

  std::mutex mu_;
  Formula bottom_;
  std::unordered_map<std::string, const Formula*> atoms_;
  std::unordered_map<std::pair<const Formula*, const Formula*>, const Formula*, PairHash> imps_;
  std::unordered_map<const Formula*, const Formula*> boxes_;
  std::vector<std::unique_ptr<Formula>> pool_;
};

const std::string& Formula::atom_name() const {
  if (!is_atom()) throw Error("atom_name on a non-atom formula");
  return name_;
}

const Formula* Formula::left() const {
  if (!is_implies()) throw Error("left on a non-implication formula");
  return left_;
}

const Formula* Formula::right() const {
  if (!is_implies()) throw Error("right on a non-implication formula");
  return right_;
}

const Formula* Formula::body() const {
  if (!is_box()) throw Error("body on a non-box formula");
  return left_;
}

const Formula* Formula::bottom() { return FormulaArena::instance().bottom(); }

const Formula* Formula::atom(std::string_view name) {
  return FormulaArena::instance().atom(name);
}

const Formula* Formula::implies(const Formula* a, const Formula* b) {
  return FormulaArena::instance().implies(a, b);
}

const Formula* Formula::box(const Formula* a) {
  return FormulaArena::instance().box(a);
}

const Formula* Formula::top() { return negation(bottom()); }

const Formula* Formula::negation(const Formula* a) { return implies(a, bottom()); }

const Formula* Formula::conjunction(const Formula* a, const Formula* b) {
  return negation(implies(a, negation(b)));
}

const Formula* Formula::disjunction(const Formula* a, const Formula* b) {
  return implies(negation(a), b);
}

const Formula* Formula::diamond(const Formula* a) {
  return negation(box(negation(a)));
}

int compare(FormulaRef a, FormulaRef b) {
  if (a == b) return 0;
  auto rank = [](FormulaRef f) {
    switch (f->kind()) {
      case Connective::Bottom: return 0;
      case Connective::Atom: return 1;
      case Connective::Implies: return 2;
      case Connective::Box: return 3;
    }
    return 4;
  };
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a->kind()) {
    case Connective::Bottom:
      return 0;
    case Connective::Atom: {
      int c = a->atom_name().compare(b->atom_name());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Connective::Implies: {
      int c = compare(a->left(), b->left());
      if (c != 0) return c;
      return compare(a->right(), b->right());
    }
    case Connective::Box:
      return compare(a->body(), b->body());
  }
  return 0;
}

}  // namespace grz
