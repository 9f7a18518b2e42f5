#include "projline/pwmap.hpp"

#include <algorithm>

#include "projline/error.hpp"

namespace projline {

bool in_open_arc(const ProjPoint& x, const Arc& arc) {
  if (arc.whole) return true;
  if (x == arc.start || x == arc.end) return false;
  if (arc.start == arc.end) return true;
  return cyclic_order(arc.start, x, arc.end);
}

namespace {

// x in the half-open arc [s, e) of a piece; s == e means the whole circle.
bool in_piece(const ProjPoint& x, const ProjPoint& s, const ProjPoint& e) {
  if (x == s || s == e) return true;
  if (x == e) return false;
  return cyclic_order(s, x, e);
}

bool in_closed_arc(const ProjPoint& x, const ProjPoint& s, const ProjPoint& e) {
  return x == s || x == e || s == e || cyclic_order(s, x, e);
}

void sort_unique(std::vector<ProjPoint>& pts) {
  std::sort(pts.begin(), pts.end(), linear_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

PwProjMap PwProjMap::normalized(const std::vector<ProjPoint>& starts, const std::vector<MoebiusMap>& maps) {
  const std::size_t n = starts.size();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!(maps[(i + n - 1) % n] == maps[i])) keep.push_back(i);
  PwProjMap out;
  if (keep.empty()) {
    out.pieces_ = {Piece{ProjPoint::infinity(), ProjPoint::infinity(), maps.empty() ? MoebiusMap() : maps[0]}};
    return out;
  }
  out.pieces_.clear();
  for (std::size_t k = 0; k < keep.size(); ++k)
    out.pieces_.push_back(Piece{starts[keep[k]], starts[keep[(k + 1) % keep.size()]], maps[keep[k]]});
  return out;
}

PwProjMap PwProjMap::build(std::vector<Piece> pieces) {
  if (pieces.empty()) throw Error(Errc::NonPartition, "no pieces");
  if (pieces.size() == 1) {
    if (!(pieces[0].from == pieces[0].to))
      throw Error(Errc::NonPartition, "a single piece must cover the whole circle");
    return PwProjMap(pieces[0].m);
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return linear_less(x.from, y.from); });
  const std::size_t n = pieces.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Piece& p = pieces[i];
    const Piece& next = pieces[(i + 1) % n];
    if (p.from == p.to) throw Error(Errc::NonPartition, "degenerate arc at " + p.from.to_string());
    if (!(p.to == next.from))
      throw Error(Errc::NonPartition, "arc ending at " + p.to.to_string() + " is not followed by an arc starting there");
  }
  std::vector<ProjPoint> images;
  for (std::size_t i = 0; i < n; ++i) {
    const Piece& prev = pieces[(i + n - 1) % n];
    ProjPoint left = prev.m.apply(pieces[i].from);
    ProjPoint right = pieces[i].m.apply(pieces[i].from);
    if (!(left == right))
      throw Error(Errc::ContinuityViolation, "pieces disagree at " + pieces[i].from.to_string() + ": " +
                                                 left.to_string() + " vs " + right.to_string());
    images.push_back(right);
  }
  // images of consecutive breakpoints must go once around the circle
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (images[i] == images[j])
        throw Error(Errc::InjectivityViolation, "breakpoints share the image " + images[i].to_string());
  if (n >= 3)
    for (std::size_t i = 0; i < n; ++i)
      if (!cyclic_order(images[i], images[(i + 1) % n], images[(i + 2) % n]))
        throw Error(Errc::InjectivityViolation, "images of breakpoints are out of cyclic order");
  std::vector<ProjPoint> starts;
  std::vector<MoebiusMap> maps;
  for (const auto& p : pieces) {
    starts.push_back(p.from);
    maps.push_back(p.m);
  }
  return normalized(starts, maps);
}

std::size_t PwProjMap::piece_at(const ProjPoint& p) const {
  std::size_t idx = pieces_.size() - 1;
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (linear_compare(pieces_[i].from, p) <= 0) idx = i;
    else break;
  return idx;
}

std::size_t PwProjMap::piece_left_of(const ProjPoint& p) const {
  std::size_t i = piece_at(p);
  if (pieces_.size() > 1 && pieces_[i].from == p) return (i + pieces_.size() - 1) % pieces_.size();
  return i;
}

ProjPoint PwProjMap::eval(const ProjPoint& p) const { return pieces_[piece_at(p)].m.apply(p); }

std::vector<ProjPoint> PwProjMap::breakpoints() const {
  std::vector<ProjPoint> out;
  if (pieces_.size() > 1)
    for (const auto& p : pieces_) out.push_back(p.from);
  return out;
}

bool PwProjMap::is_identity() const { return pieces_.size() == 1 && pieces_[0].m.is_identity(); }

bool operator==(const PwProjMap& f, const PwProjMap& g) {
  if (f.pieces_.size() != g.pieces_.size()) return false;
  for (std::size_t i = 0; i < f.pieces_.size(); ++i) {
    if (!(f.pieces_[i].m == g.pieces_[i].m)) return false;
    if (f.pieces_.size() > 1 && !(f.pieces_[i].from == g.pieces_[i].from)) return false;
  }
  return true;
}

std::string PwProjMap::to_string() const {
  std::string out;
  for (const auto& p : pieces_) {
    if (!out.empty()) out += "; ";
    out += "[" + p.from.to_string() + ", " + p.to.to_string() + "): " + p.m.to_string();
  }
  return out;
}

PwProjMap compose(const PwProjMap& f, const PwProjMap& g) {
  std::vector<ProjPoint> cuts = g.breakpoints();
  if (!f.breakpoints().empty()) {
    PwProjMap ginv = inverse(g);
    for (const auto& b : f.breakpoints()) cuts.push_back(ginv.eval(b));
  }
  sort_unique(cuts);
  if (cuts.empty()) return PwProjMap(f.pieces_[0].m * g.pieces_[0].m);
  std::vector<MoebiusMap> maps;
  for (const auto& s : cuts) {
    const MoebiusMap& mg = g.pieces_[g.piece_at(s)].m;
    const MoebiusMap& mf = f.pieces_[f.piece_at(mg.apply(s))].m;
    maps.push_back(mf * mg);
  }
  return PwProjMap::normalized(cuts, maps);
}

PwProjMap inverse(const PwProjMap& f) {
  if (f.pieces_.size() == 1) return PwProjMap(f.pieces_[0].m.inverse());
  std::vector<std::pair<ProjPoint, MoebiusMap>> parts;
  for (const auto& p : f.pieces_) parts.emplace_back(p.m.apply(p.from), p.m.inverse());
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return linear_less(x.first, y.first); });
  std::vector<ProjPoint> starts;
  std::vector<MoebiusMap> maps;
  for (auto& [s, m] : parts) {
    starts.push_back(s);
    maps.push_back(m);
  }
  return PwProjMap::normalized(starts, maps);
}

OneSided one_sided_derivatives(const PwProjMap& f, const ProjPoint& p) {
  return {derivative_at(f.pieces()[f.piece_left_of(p)].m, p), derivative_at(f.pieces()[f.piece_at(p)].m, p)};
}

std::vector<Defect> c1_defect_points(const PwProjMap& f) {
  std::vector<Defect> out;
  for (const auto& b : f.breakpoints()) {
    OneSided d = one_sided_derivatives(f, b);
    if (!(d.left == d.right)) out.push_back({b, d.left, d.right});
  }
  return out;
}

FixedSet fixed_set(const PwProjMap& f) {
  FixedSet out;
  const auto& ps = f.pieces();
  if (ps.size() == 1) {
    if (ps[0].m.is_identity()) {
      out.whole_circle = true;
      return out;
    }
    for (const auto& x : fixed_points(ps[0].m)) out.components.push_back({x, x});
    return out;
  }
  std::vector<FixedComponent> arcs, points;
  for (const auto& p : ps) {
    if (p.m.is_identity()) {
      arcs.push_back({p.from, p.to});
      continue;
    }
    for (const auto& x : fixed_points(p.m))
      if (in_piece(x, p.from, p.to)) points.push_back({x, x});
  }
  // adjacent identity arcs cannot occur after normalization
  for (const auto& pt : points) {
    bool absorbed = false;
    for (const auto& a : arcs)
      if (in_closed_arc(pt.start, a.start, a.end)) absorbed = true;
    if (!absorbed) out.components.push_back(pt);
  }
  for (const auto& a : arcs) out.components.push_back(a);
  std::sort(out.components.begin(), out.components.end(),
            [](const FixedComponent& x, const FixedComponent& y) { return linear_less(x.start, y.start); });
  return out;
}

std::vector<Arc> support(const PwProjMap& f) {
  FixedSet fs = fixed_set(f);
  if (fs.whole_circle) return {};
  if (fs.components.empty()) return {Arc{ProjPoint::infinity(), ProjPoint::infinity(), true}};
  std::vector<Arc> out;
  const auto& cs = fs.components;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto& next = cs[(i + 1) % cs.size()];
    // a closed arc that wraps all the way to the next component leaves no gap
    if (cs.size() > 1 && cs[i].end == next.start) continue;
    out.push_back(Arc{cs[i].end, next.start});
  }
  return out;
}

std::vector<std::pair<ProjPoint, ProjPoint>> successive_fixed_pairs(const PwProjMap& f) {
  if (f.is_identity()) throw Error(Errc::IdentityInput, "identity has no successive fixed points");
  std::vector<std::pair<ProjPoint, ProjPoint>> out;
  for (const auto& arc : support(f))
    if (!arc.whole) out.emplace_back(arc.start, arc.end);
  return out;
}

std::vector<LinkedConfig> linked_pairs(const PwProjMap& f, const PwProjMap& g) {
  auto pf = successive_fixed_pairs(f);
  auto pg = successive_fixed_pairs(g);
  std::vector<LinkedConfig> out;
  for (const auto& [a, b] : pf)
    for (const auto& [c, d] : pg) {
      Arc cd{c, d}, ab{a, b};
      int x = (in_open_arc(a, cd) ? 1 : 0) + (a == b ? 0 : (in_open_arc(b, cd) ? 1 : 0));
      int y = (in_open_arc(c, ab) ? 1 : 0) + (c == d ? 0 : (in_open_arc(d, ab) ? 1 : 0));
      if (x == 1 || y == 1) out.push_back({a, b, c, d, x == 1 && y == 1});
    }
  return out;
}

AffineGerm compose(const AffineGerm& x, const AffineGerm& y) {
  return {x.slope * y.slope, x.slope * y.intercept + x.intercept};
}

AffineGerm germ_at(const PwProjMap& f, Side side) {
  const ProjPoint inf = ProjPoint::infinity();
  if (!(f.eval(inf) == inf)) throw Error(Errc::DoesNotFixInfinity, "map does not fix infinity");
  const MoebiusMap& m = f.pieces()[side == Side::Plus ? f.piece_left_of(inf) : f.piece_at(inf)].m;
  if (m.c().sign() != 0) throw Error(Errc::DoesNotFixInfinity, "piece at infinity is not affine");
  return {m.a() / m.d(), m.b() / m.d()};
}

bool is_identity_outside(const PwProjMap& f, const Arc& arc) {
  if (arc.whole || arc.start == arc.end) return true;
  for (const auto& comp : support(f)) {
    if (comp.whole || comp.start == comp.end) return false;
    const ProjPoint& u = comp.start;
    const ProjPoint& v = comp.end;
    if (u == arc.end || !in_closed_arc(u, arc.start, arc.end)) return false;
    if (v == arc.start || !in_closed_arc(v, arc.start, arc.end)) return false;
    if (!(v == arc.end) && !cyclic_order(u, v, arc.end)) return false;
  }
  return true;
}

PwProjMap split_at_fixed_point(const PwProjMap& f, const ProjPoint& p) {
  const ProjPoint inf = ProjPoint::infinity();
  if (!(f.eval(inf) == inf)) throw Error(Errc::DoesNotFixInfinity, "map does not fix infinity");
  if (!(f.eval(p) == p)) throw Error(Errc::PointNotFixed, p.to_string() + " is not fixed");
  if (p.is_infinity()) return f;
  std::vector<ProjPoint> starts{p, inf};
  for (const auto& b : f.breakpoints())
    if (linear_less(p, b)) starts.push_back(b);
  sort_unique(starts);
  std::vector<MoebiusMap> maps;
  for (const auto& s : starts) maps.push_back(s.is_infinity() ? MoebiusMap() : f.pieces()[f.piece_at(s)].m);
  return PwProjMap::normalized(starts, maps);
}

std::vector<std::pair<std::string, std::string>> sample(const PwProjMap& f, int n, const Rational& lo,
                                                        const Rational& hi, int digits) {
  if (n < 1) throw Error(Errc::InvalidArgument, "sample count must be positive");
  std::vector<std::pair<std::string, std::string>> rows;
  for (int k = 0; k < n; ++k) {
    Rational t = n == 1 ? lo : Rational(lo + (hi - lo) * k / (n - 1));
    ProjPoint y = f.eval(ProjPoint(t));
    rows.emplace_back(to_decimal(t, digits), y.is_infinity() ? "inf" : y.value().to_decimal(digits));
  }
  return rows;
}

}  // namespace projline
