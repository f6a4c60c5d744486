#include "bsplus/bsgroup.hpp"

namespace bsplus {

BSElement mul(const BSContext& ctx, const BSElement& g, const BSElement& h) {
  return {g.m + h.m, ctx.power(h.m) * g.x + h.x};
}

bool commutes(const BSContext& ctx, const BSElement& g, const BSElement& h) {
  Integer lhs = (ctx.power(h.m) - 1) * g.x;
  Integer rhs = (ctx.power(g.m) - 1) * h.x;
  return lhs == rhs;
}

bool commutes_by_products(const BSContext& ctx, const BSElement& g, const BSElement& h) {
  return mul(ctx, g, h) == mul(ctx, h, g);
}

}  // namespace bsplus
