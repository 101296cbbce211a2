#include "hb/blattner.hpp"

#include <mutex>
#include <unordered_map>

namespace hb {

namespace {

std::mutex g_mu;
// S^d(u cap p) decomposed over l cap k, per parabolic.
std::unordered_map<std::string, std::shared_ptr<const std::vector<IrrSum>>> g_sym;
std::unordered_map<std::string, std::shared_ptr<const std::vector<WeylWord>>> g_weyl;

std::shared_ptr<const std::vector<IrrSum>> sym_decomp(const ParabolicData& q, int degree) {
  {
    std::lock_guard<std::mutex> g(g_mu);
    auto it = g_sym.find(q.id);
    if (it != g_sym.end() && int(it->second->size()) > degree) return it->second;
  }
  const auto& rs = *q.ctx->rs;
  std::vector<Weight> gens;
  for (int i : q.u_cap_p) gens.push_back(rs.root_w(i));
  auto chars = sym_power_characters(rs.rank(), gens, degree);
  std::vector<IrrSum> out;
  for (auto& ch : chars) out.push_back(decompose(*q.l_cap_k, ch));
  auto ptr = std::make_shared<const std::vector<IrrSum>>(std::move(out));
  std::lock_guard<std::mutex> g(g_mu);
  auto& slot = g_sym[q.id];
  if (!slot || slot->size() < ptr->size()) slot = ptr;
  return ptr;
}

std::shared_ptr<const std::vector<WeylWord>> weyl_of(const Subsystem& s, uint64_t cap) {
  {
    std::lock_guard<std::mutex> g(g_mu);
    auto it = g_weyl.find(s.id());
    if (it != g_weyl.end()) return it->second;
  }
  auto w = std::make_shared<const std::vector<WeylWord>>(s.weyl_elements(cap));
  std::lock_guard<std::mutex> g(g_mu);
  g_weyl.emplace(s.id(), w);
  return w;
}

Weight half_sum(const RootSystem& rs, const std::vector<int>& idx, Q factor) {
  Weight w = zeros(rs.rank());
  for (int i : idx) w = add(w, rs.root_w(i));
  return scale(w, factor);
}

}  // namespace

ParabolicPtr make_parabolic(RealFormPtr ctx, int node) {
  const auto& rs = *ctx->rs;
  if (node < 0 || node >= rs.ss_rank()) throw std::invalid_argument("invalid parabolic node " + std::to_string(node));
  auto q = std::make_shared<ParabolicData>();
  q->ctx = ctx;
  q->node = node;
  q->id = ctx->k->id() + "|q" + std::to_string(node);
  const auto& alpha = rs.pos_roots_alpha();
  q->u_abelian = true;
  for (size_t i = 0; i < alpha.size(); ++i) {
    int c = alpha[i][node];
    if (c == 0) {
      q->levi_roots.push_back(int(i));
      continue;
    }
    q->u_roots.push_back(int(i));
    if (c > 1) q->u_abelian = false;
    if (ctx->noncompact_root(int(i))) {
      if (alpha[i][ctx->painted] != 1)
        throw std::logic_error(ctx->label + ": noncompact root with painted coefficient above 1");
      q->u_cap_p.push_back(int(i));
    }
  }
  auto rf = ctx;
  q->l_cap_k = std::make_shared<Subsystem>(Subsystem::where(
      ctx->rs,
      [rf, node](const std::vector<int>& a) {
        return a[node] == 0 && (rf->painted < 0 || a[rf->painted] % 2 == 0);
      },
      ctx->k->id() + "&l" + std::to_string(node)));
  q->rho = rs.rho();
  q->rho_u = half_sum(rs, q->u_roots, Q(1, 2));
  q->two_rho_u_cap_p = half_sum(rs, q->u_cap_p, Q(1));
  return q;
}

void validate(const AqModuleSpec& aq) {
  const auto& rs = *aq.q->ctx->rs;
  if (int(aq.lambda.size()) != rs.rank()) throw std::invalid_argument("lambda has the wrong rank");
  for (int j = 0; j < rs.ss_rank(); ++j)
    if (j != aq.q->node && aq.lambda[j] != Q(0))
      throw std::invalid_argument("lambda is not a character of the Levi of q(" + std::to_string(aq.q->node + 1) +
                                  ")");
}

const char* to_string(Range r) {
  switch (r) {
    case Range::Good: return "good";
    case Range::WeaklyFair: return "weakly_fair";
    default: return "neither";
  }
}

Range range_check(const AqModuleSpec& aq) {
  const auto& q = *aq.q;
  const auto& rs = *q.ctx->rs;
  auto lr = add(aq.lambda, q.rho);
  auto lu = add(aq.lambda, q.rho_u);
  bool good = true, fair = true;
  for (int i : q.u_roots) {
    auto a = rs.root_w(i);
    if (!(rs.inner(lr, a) > Q(0))) good = false;
    if (rs.inner(lu, a) < Q(0)) fair = false;
  }
  if (good) return Range::Good;
  return fair ? Range::WeaklyFair : Range::Neither;
}

Weight infinitesimal_character(const AqModuleSpec& aq) { return add(aq.lambda, aq.q->rho); }

Weight blattner_base(const AqModuleSpec& aq) { return add(aq.lambda, aq.q->two_rho_u_cap_p); }

int64_t blattner_m(const AqModuleSpec& aq, const Weight& nu) {
  const auto& ctx = *aq.q->ctx;
  auto base = blattner_base(aq);
  Q dq = ctx.grade(nu) - ctx.grade(base);
  if (dq.denominator() != 1 || dq < Q(0)) return 0;
  int d = int(dq.numerator());
  if (aq.q->u_cap_p.empty() && d > 0) return 0;
  auto sym = sym_decomp(*aq.q, d);
  return (*sym)[d].at(sub(nu, base));
}

int64_t blattner_multiplicity(const AqModuleSpec& aq, const Weight& mu, uint64_t weyl_cap) {
  validate(aq);
  const auto& k = *aq.q->ctx->k;
  if (!k.is_dominant(mu) || !k.is_integral(mu)) throw std::invalid_argument("mu is not K-dominant integral");
  auto words = weyl_of(k, weyl_cap ? weyl_cap : hb::weyl_cap());
  auto shifted = add(mu, k.rho());
  int64_t total = 0;
  for (const auto& w : *words) {
    auto nu = sub(k.apply(w, shifted), k.rho());
    if (!aq.q->l_cap_k->is_dominant(nu)) continue;
    int64_t m = blattner_m(aq, nu);
    if (m) total += w.parity * m;
  }
  return total;
}

bool AqKTypes::exact(const Weight& mu) const {
  if (ctx->compact()) return true;
  if (hermitian) return ctx->grade(mu) - base_grade <= Q(max_degree);
  Q reach = base_pair + Q(max_degree + 1);
  if (reach <= Q(0)) return false;
  auto v = add(mu, ctx->k->rho());
  return reach * reach > h_norm2 * ctx->rs->inner(v, v);
}

AqKTypes aq_ktypes(const AqModuleSpec& aq, int max_degree) {
  validate(aq);
  if (max_degree < 0) throw std::invalid_argument("negative degree");
  const auto& q = *aq.q;
  const auto& ctx = *q.ctx;
  const auto& k = *ctx.k;
  const auto& rs = *ctx.rs;
  AqKTypes out;
  out.ctx = q.ctx;
  out.base = blattner_base(aq);
  out.max_degree = q.u_cap_p.empty() ? 0 : max_degree;
  out.hermitian = ctx.hermitian;
  out.base_grade = ctx.grade(out.base);
  if (!ctx.compact()) {
    int p = ctx.painted;
    out.base_pair = rs.to_alpha(add(out.base, k.rho()))[p];
    Q dp = rs.half_len2()[p];
    out.h_norm2 = rs.inner(rs.omega(p), rs.omega(p)) / (dp * dp);
  }
  if (q.u_cap_p.empty()) max_degree = 0;
  auto sym = sym_decomp(q, max_degree);
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& [w, m] : (*sym)[d].terms) {
      auto nu = add(out.base, w);
      auto r = k.to_dominant(add(nu, k.rho()));
      if (!k.is_dominant(nu)) out.shortcut = false;
      if (r.singular) continue;
      out.ktypes.add(sub(r.dominant, k.rho()), r.parity * m);
    }
  }
  out.applicable = out.shortcut || range_check(aq) != Range::Neither;
  return out;
}

IrreducibilityHint abelian_irreducibility_hint(const AqModuleSpec& aq) {
  if (aq.q->u_abelian && range_check(aq) != Range::Neither) return IrreducibilityHint::IrreducibleOrZero;
  return IrreducibilityHint::Unknown;
}

void clear_blattner_caches() {
  std::lock_guard<std::mutex> g(g_mu);
  g_sym.clear();
  g_weyl.clear();
}

}  // namespace hb
