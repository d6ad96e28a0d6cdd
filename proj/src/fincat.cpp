#include "daggercat/fincat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "daggercat/errors.hpp"

namespace daggercat {

namespace {

std::string tuple_msg(std::initializer_list<std::string> parts) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) os << ", ";
    os << p;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

int FinDaggerCategory::object_index(const std::string& id) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), id);
  if (it == objects.end() || *it != id) return -1;
  return static_cast<int>(it - objects.begin());
}

int FinDaggerCategory::morphism_index(const std::string& id) const {
  auto it = std::lower_bound(
      morphisms.begin(), morphisms.end(), id,
      [](const MorphismRec& m, const std::string& s) { return m.id < s; });
  if (it == morphisms.end() || it->id != id) return -1;
  return static_cast<int>(it - morphisms.begin());
}

int FinDaggerCategory::comp(int g, int f) const {
  if (!composable(g, f))
    throw ValidationError(ErrKind::NotComposable,
                          tuple_msg({mid(g), mid(f)}) + " in " + name);
  return compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
}

std::vector<int> FinDaggerCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int m = 0; m < static_cast<int>(morphisms.size()); ++m)
    if (src(m) == a && tgt(m) == b) out.push_back(m);
  return out;
}

FinDaggerCategory validate_category(const CategoryDescription& desc) {
  FinDaggerCategory c;
  c.name = desc.name;

  c.objects = desc.objects;
  std::sort(c.objects.begin(), c.objects.end());
  for (std::size_t i = 1; i < c.objects.size(); ++i)
    if (c.objects[i] == c.objects[i - 1])
      throw ValidationError(ErrKind::DuplicateId, "object " + c.objects[i]);

  std::set<std::string> seen;
  for (const auto& m : desc.morphisms)
    if (!seen.insert(m.id).second)
      throw ValidationError(ErrKind::DuplicateId, "morphism " + m.id);

  std::vector<MorphismDecl> decls = desc.morphisms;
  std::sort(decls.begin(), decls.end(),
            [](const MorphismDecl& a, const MorphismDecl& b) { return a.id < b.id; });

  c.morphisms.reserve(decls.size());
  for (const auto& d : decls) {
    MorphismRec r;
    r.id = d.id;
    r.src = c.object_index(d.src);
    r.tgt = c.object_index(d.tgt);
    if (r.src < 0)
      throw ValidationError(ErrKind::DanglingReference,
                            "morphism " + d.id + " source " + d.src);
    if (r.tgt < 0)
      throw ValidationError(ErrKind::DanglingReference,
                            "morphism " + d.id + " target " + d.tgt);
    c.morphisms.push_back(std::move(r));
  }

  const int n_obj = static_cast<int>(c.objects.size());
  const int n_mor = static_cast<int>(c.morphisms.size());

  // Identities.
  c.identity.assign(static_cast<std::size_t>(n_obj), -1);
  for (const auto& [obj, mor] : desc.identities) {
    const int a = c.object_index(obj);
    if (a < 0)
      throw ValidationError(ErrKind::DanglingReference, "identity of " + obj);
    const int m = c.morphism_index(mor);
    if (m < 0)
      throw ValidationError(ErrKind::DanglingReference,
                            "identity morphism " + mor);
    c.identity[static_cast<std::size_t>(a)] = m;
  }
  for (int a = 0; a < n_obj; ++a) {
    const int m = c.identity[static_cast<std::size_t>(a)];
    if (m < 0)
      throw ValidationError(ErrKind::BadIdentity,
                            "no identity for " + c.objects[static_cast<std::size_t>(a)]);
    if (c.src(m) != a || c.tgt(m) != a)
      throw ValidationError(ErrKind::BadIdentity,
                            c.mid(m) + " is not an endomorphism of " +
                                c.objects[static_cast<std::size_t>(a)]);
  }

  // Composition table.
  c.compose.assign(static_cast<std::size_t>(n_mor),
                   std::vector<int>(static_cast<std::size_t>(n_mor), -1));
  for (const auto& row : desc.composition) {
    const int g = c.morphism_index(row[0]);
    const int f = c.morphism_index(row[1]);
    const int gf = c.morphism_index(row[2]);
    if (g < 0 || f < 0 || gf < 0)
      throw ValidationError(ErrKind::DanglingReference,
                            "composition row " + tuple_msg({row[0], row[1], row[2]}));
    if (!c.composable(g, f))
      throw ValidationError(ErrKind::SpuriousComposite,
                            tuple_msg({row[0], row[1]}));
    auto& cell = c.compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
    if (cell >= 0 && cell != gf)
      throw ValidationError(ErrKind::DuplicateId,
                            "composition row " + tuple_msg({row[0], row[1]}));
    cell = gf;
  }
  for (int g = 0; g < n_mor; ++g)
    for (int f = 0; f < n_mor; ++f) {
      if (!c.composable(g, f)) continue;
      const int gf = c.compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
      if (gf < 0)
        throw ValidationError(ErrKind::MissingComposite,
                              tuple_msg({c.mid(g), c.mid(f)}));
      if (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))
        throw ValidationError(ErrKind::CompositeWrongEndpoints,
                              tuple_msg({c.mid(g), c.mid(f), c.mid(gf)}));
    }

  // Unit laws.
  for (int f = 0; f < n_mor; ++f) {
    const int l = c.identity[static_cast<std::size_t>(c.tgt(f))];
    const int r = c.identity[static_cast<std::size_t>(c.src(f))];
    if (c.compose[static_cast<std::size_t>(l)][static_cast<std::size_t>(f)] != f)
      throw ValidationError(ErrKind::BadIdentity, tuple_msg({c.mid(l), c.mid(f)}));
    if (c.compose[static_cast<std::size_t>(f)][static_cast<std::size_t>(r)] != f)
      throw ValidationError(ErrKind::BadIdentity, tuple_msg({c.mid(f), c.mid(r)}));
  }

  // Associativity.
  for (int h = 0; h < n_mor; ++h)
    for (int g = 0; g < n_mor; ++g) {
      if (!c.composable(h, g)) continue;
      const int hg = c.compose[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)];
      for (int f = 0; f < n_mor; ++f) {
        if (!c.composable(g, f)) continue;
        const int gf = c.compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
        if (c.compose[static_cast<std::size_t>(hg)][static_cast<std::size_t>(f)] !=
            c.compose[static_cast<std::size_t>(h)][static_cast<std::size_t>(gf)])
          throw ValidationError(ErrKind::NonAssociative,
                                tuple_msg({c.mid(h), c.mid(g), c.mid(f)}));
      }
    }

  // Dagger.
  c.dagger.assign(static_cast<std::size_t>(n_mor), -1);
  for (const auto& [from, to] : desc.dagger) {
    const int m = c.morphism_index(from);
    const int d = c.morphism_index(to);
    if (m < 0 || d < 0)
      throw ValidationError(ErrKind::DanglingReference,
                            "dagger row " + tuple_msg({from, to}));
    c.dagger[static_cast<std::size_t>(m)] = d;
  }
  for (int m = 0; m < n_mor; ++m) {
    const int d = c.dagger[static_cast<std::size_t>(m)];
    if (d < 0)
      throw ValidationError(ErrKind::DanglingReference, "no dagger for " + c.mid(m));
    if (c.src(d) != c.tgt(m) || c.tgt(d) != c.src(m))
      throw ValidationError(ErrKind::DaggerWrongEndpoints,
                            tuple_msg({c.mid(m), c.mid(d)}));
    if (c.dagger[static_cast<std::size_t>(d)] != m)
      throw ValidationError(ErrKind::DaggerNotInvolutive, c.mid(m));
  }
  for (int a = 0; a < n_obj; ++a) {
    const int i = c.identity[static_cast<std::size_t>(a)];
    if (c.dagger[static_cast<std::size_t>(i)] != i)
      throw ValidationError(ErrKind::DaggerNotFunctorial, c.mid(i));
  }
  for (int g = 0; g < n_mor; ++g)
    for (int f = 0; f < n_mor; ++f) {
      if (!c.composable(g, f)) continue;
      const int gf = c.compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
      const int lhs = c.dagger[static_cast<std::size_t>(gf)];
      const int rhs = c.compose[static_cast<std::size_t>(c.dagger[static_cast<std::size_t>(f)])]
                               [static_cast<std::size_t>(c.dagger[static_cast<std::size_t>(g)])];
      if (lhs != rhs)
        throw ValidationError(ErrKind::DaggerNotFunctorial,
                              tuple_msg({c.mid(g), c.mid(f)}));
    }

  return c;
}

FinDaggerCategory opposite(const FinDaggerCategory& c) {
  FinDaggerCategory o = c;
  o.name = c.name + "_op";
  const int n = static_cast<int>(c.morphisms.size());
  for (int m = 0; m < n; ++m) {
    o.morphisms[static_cast<std::size_t>(m)].src = c.tgt(m);
    o.morphisms[static_cast<std::size_t>(m)].tgt = c.src(m);
  }
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      o.compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] =
          c.compose[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
  return o;
}

bool is_unitary(const FinDaggerCategory& c, int m) {
  const int d = c.dagger[static_cast<std::size_t>(m)];
  return c.compose[static_cast<std::size_t>(d)][static_cast<std::size_t>(m)] ==
             c.identity[static_cast<std::size_t>(c.src(m))] &&
         c.compose[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)] ==
             c.identity[static_cast<std::size_t>(c.tgt(m))];
}

bool is_unitary(const FinDaggerCategory& c, const std::string& id) {
  const int m = c.morphism_index(id);
  if (m < 0) throw ValidationError(ErrKind::UnknownMorphism, id);
  return is_unitary(c, m);
}

CategoryDescription describe(const FinDaggerCategory& c) {
  CategoryDescription d;
  d.name = c.name;
  d.objects = c.objects;
  for (const auto& m : c.morphisms)
    d.morphisms.push_back({m.id, c.objects[static_cast<std::size_t>(m.src)],
                           c.objects[static_cast<std::size_t>(m.tgt)]});
  for (std::size_t a = 0; a < c.objects.size(); ++a)
    d.identities[c.objects[a]] = c.mid(c.identity[a]);
  const int n = static_cast<int>(c.morphisms.size());
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      if (c.composable(g, f))
        d.composition.push_back(
            {c.mid(g), c.mid(f),
             c.mid(c.compose[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)])});
  for (int m = 0; m < n; ++m)
    d.dagger[c.mid(m)] = c.mid(c.dagger[static_cast<std::size_t>(m)]);
  return d;
}

}  // namespace daggercat
