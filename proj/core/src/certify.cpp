// Part of the polybasis project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "polybasis/certify.hpp"

#include "polybasis/error.hpp"
#include "polybasis/zigzag.hpp"

namespace polybasis {

Certificate Certificate::empty_fill(Object x) {
  Certificate c;
  c.kind = Kind::empty_fill;
  c.object = std::move(x);
  return c;
}

Certificate Certificate::inv_pair(ZigZag u) {
  Certificate c;
  c.kind = Kind::inv_pair;
  c.u = std::move(u);
  return c;
}

Certificate Certificate::rotate(Certificate child, ZigZag u, ZigZag v) {
  Certificate c;
  c.kind = Kind::rotate;
  c.u = std::move(u);
  c.v = std::move(v);
  c.children.push_back(std::move(child));
  return c;
}

Certificate Certificate::paste(Certificate a, Certificate b, ZigZag u, ZigZag v, ZigZag w) {
  Certificate c;
  c.kind = Kind::paste;
  c.u = std::move(u);
  c.v = std::move(v);
  c.w = std::move(w);
  c.children.push_back(std::move(a));
  c.children.push_back(std::move(b));
  return c;
}

Certificate Certificate::invert_node(Certificate child, ZigZag u) {
  Certificate c;
  c.kind = Kind::invert;
  c.u = std::move(u);
  c.children.push_back(std::move(child));
  return c;
}

Certificate Certificate::diamond_fill(Object apex, StepRef left, StepRef right) {
  Certificate c;
  c.kind = Kind::diamond_fill;
  c.apex = std::move(apex);
  c.left = left;
  c.right = right;
  return c;
}

const char* certificate_kind_name(Certificate::Kind kind) {
  switch (kind) {
    case Certificate::Kind::empty_fill: return "empty-fill";
    case Certificate::Kind::inv_pair: return "inv-pair";
    case Certificate::Kind::rotate: return "rotate";
    case Certificate::Kind::paste: return "paste";
    case Certificate::Kind::invert: return "invert";
    case Certificate::Kind::diamond_fill: return "diamond-fill";
  }
  return "?";
}

std::size_t expected_arity(Certificate::Kind kind) {
  switch (kind) {
    case Certificate::Kind::rotate:
    case Certificate::Kind::invert: return 1;
    case Certificate::Kind::paste: return 2;
    default: return 0;
  }
}

ZigZag certificate_conclusion(const RewritingSystem& sys, const LocalConfluenceStructure& lc,
                              const Certificate& node) {
  switch (node.kind) {
    case Certificate::Kind::empty_fill:
      return empty_zigzag(node.object);
    case Certificate::Kind::inv_pair:
      return compose(sys, node.u, invert(sys, node.u));
    case Certificate::Kind::rotate:
      return compose(sys, node.v, node.u);
    case Certificate::Kind::paste:
      return compose(sys, node.u, invert(sys, node.w));
    case Certificate::Kind::invert:
      return invert(sys, node.u);
    case Certificate::Kind::diamond_fill: {
      Object left_target = sys.apply_forward(node.apex, node.left);
      ZigZag peak{left_target, {backward(node.left), forward(node.right)}};
      PeakResolution resolution = lc.resolve(sys, node.apex, node.left, node.right);
      return compose(sys, peak, invert(sys, resolution.path));
    }
  }
  raise(ErrorCode::invalid_system, "unhandled certificate kind");
}

std::size_t certificate_size(const Certificate& cert) {
  std::size_t n = 1;
  for (const Certificate& child : cert.children) n += certificate_size(child);
  return n;
}

std::size_t count_leaves(const Certificate& cert, Certificate::Kind kind) {
  if (cert.children.empty()) return cert.kind == kind ? 1 : 0;
  std::size_t n = 0;
  for (const Certificate& child : cert.children) n += count_leaves(child, kind);
  return n;
}

namespace {

// Certificate construction paired with the conclusion it derives, so premise
// zig-zags can be threaded without re-deriving them.
struct Derivation {
  Certificate cert;
  ZigZag conclusion;
};

class Compiler {
 public:
  Compiler(const RewritingSystem& sys, const LocalConfluenceStructure& lc) : sys_(sys), lc_(lc) {}

  Derivation inv_pair(const ZigZag& u) const {
    return Derivation{Certificate::inv_pair(u), compose(sys_, u, invert(sys_, u))};
  }

  // Concatenation of closed zig-zags at the same basepoint: paste with an
  // empty middle zig-zag.
  Derivation concat(Derivation a, Derivation b) const {
    ZigZag middle = empty_zigzag(a.conclusion.start);
    ZigZag glued = compose(sys_, a.conclusion, b.conclusion);
    ZigZag w = invert(sys_, b.conclusion);
    Certificate cert = Certificate::paste(std::move(a.cert), std::move(b.cert),
                                          std::move(a.conclusion), std::move(middle), std::move(w));
    return Derivation{std::move(cert), std::move(glued)};
  }

  // Rotation at a step index of the child's closed conclusion.
  Derivation rotate_at(Derivation child, std::size_t cut) const {
    ZigZag u{child.conclusion.start,
             {child.conclusion.steps.begin(), child.conclusion.steps.begin() + static_cast<long>(cut)}};
    ZigZag v{zigzag_target(sys_, u),
             {child.conclusion.steps.begin() + static_cast<long>(cut), child.conclusion.steps.end()}};
    ZigZag rotated = compose(sys_, v, u);
    Certificate cert = Certificate::rotate(std::move(child.cert), std::move(u), std::move(v));
    return Derivation{std::move(cert), std::move(rotated)};
  }

  Derivation invert_of(Derivation child) const {
    ZigZag conclusion = invert(sys_, child.conclusion);
    Certificate cert = Certificate::invert_node(std::move(child.cert), std::move(child.conclusion));
    return Derivation{std::move(cert), std::move(conclusion)};
  }

  // Conclusion source.target⁻¹ for a bare atomic cell read forward.
  Derivation atomic(const AtomicCell& cell) const {
    switch (cell.kind) {
      case AtomicCell::Kind::rinv:
        return inv_pair(ZigZag{cell.at, {forward(cell.step)}});
      case AtomicCell::Kind::linv:
        return inv_pair(ZigZag{cell.at, {backward(cell.step)}});
      case AtomicCell::Kind::diamond: {
        Certificate leaf = Certificate::diamond_fill(cell.apex, cell.left, cell.right);
        ZigZag conclusion = certificate_conclusion(sys_, lc_, leaf);
        return Derivation{std::move(leaf), std::move(conclusion)};
      }
      case AtomicCell::Kind::generator:
        raise(ErrorCode::invalid_system,
              "declared 2-cell generators have no certificate rule; only diamonds and "
              "cancellation cells are derivable");
    }
    raise(ErrorCode::invalid_system, "unhandled cell kind");
  }

  // Conclusion source.target⁻¹ of a whiskered cell: wrap the atomic
  // conclusion in its contexts by rotation and pasting.
  Derivation whiskered(const WhiskeredCell& wc) const {
    Derivation core = atomic(wc.cell);
    if (wc.dir == Direction::backward) core = invert_of(std::move(core));

    // conclusion now p.q⁻¹; build l.p.r.r⁻¹.q⁻¹.l⁻¹
    const ZigZag p = wc.dir == Direction::forward ? cell_source(sys_, wc.cell)
                                                  : cell_target(sys_, lc_, wc.cell);
    Derivation result = std::move(core);
    if (!wc.right.steps.empty()) {
      Derivation flipped = rotate_at(std::move(result), p.steps.size());  // q⁻¹.p
      Derivation padded = concat(inv_pair(wc.right), std::move(flipped));  // r.r⁻¹.q⁻¹.p
      const std::size_t rest = padded.conclusion.steps.size() - p.steps.size();
      result = rotate_at(std::move(padded), rest);  // p.r.r⁻¹.q⁻¹
    }
    if (!wc.left.steps.empty()) {
      Derivation padded = concat(inv_pair(invert(sys_, wc.left)), std::move(result));
      result = rotate_at(std::move(padded), wc.left.steps.size());  // l.p.r.r⁻¹.q⁻¹.l⁻¹
    }
    return result;
  }

 private:
  const RewritingSystem& sys_;
  const LocalConfluenceStructure& lc_;
};

}  // namespace

Certificate certify_closed(const RewritingSystem& sys, const TerminationOrder& order,
                           const LocalConfluenceStructure& lc, const ZigZag& u,
                           CoherenceStats* stats) {
  if (zigzag_target(sys, u) != u.start)
    raise(ErrorCode::not_parallel, "certify_closed requires a closed zig-zag");

  if (u.steps.empty()) return Certificate::empty_fill(u.start);

  const std::size_t n = u.steps.size();
  if (n % 2 == 0) {
    ZigZag half{u.start, {u.steps.begin(), u.steps.begin() + static_cast<long>(n / 2)}};
    ZigZag mirror = invert(sys, half);
    if (std::equal(mirror.steps.begin(), mirror.steps.end(), u.steps.begin() + static_cast<long>(n / 2)))
      return Certificate::inv_pair(std::move(half));
  }

  RewriteZigZag witness = contract_closed(sys, order, lc, u, stats);
  Compiler compiler(sys, lc);

  // fold the chain right to left with paste; the last link closes on the
  // empty zig-zag at the basepoint
  Derivation acc{Certificate::empty_fill(u.start), empty_zigzag(u.start)};
  std::vector<ZigZag> chain;
  chain.reserve(witness.cells.size() + 1);
  chain.push_back(witness.source);
  for (const WhiskeredCell& cell : witness.cells)
    chain.push_back(whiskered_target(sys, lc, cell));

  for (std::size_t i = witness.cells.size(); i-- > 0;) {
    Derivation link = compiler.whiskered(witness.cells[i]);
    ZigZag w_arg = empty_zigzag(u.start);
    ZigZag conclusion = chain[i];
    Certificate cert = Certificate::paste(std::move(link.cert), std::move(acc.cert), chain[i],
                                          chain[i + 1], std::move(w_arg));
    acc = Derivation{std::move(cert), std::move(conclusion)};
  }
  return std::move(acc.cert);
}

namespace {

struct CertChecker {
  const RewritingSystem& sys;
  const LocalConfluenceStructure& lc;
  Report failure = Report::pass();
  bool failed = false;

  void fail(const std::string& path, const std::string& reason) {
    if (failed) return;
    failed = true;
    failure = Report::fail("certificate node " + path + ": " + reason);
  }

  std::optional<ZigZag> conclusion(const Certificate& node, const std::string& path) {
    if (node.children.size() != expected_arity(node.kind)) {
      fail(path, std::string(certificate_kind_name(node.kind)) + " expects " +
                     std::to_string(expected_arity(node.kind)) + " children, has " +
                     std::to_string(node.children.size()));
      return std::nullopt;
    }
    std::vector<ZigZag> child_conclusions;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      auto c = conclusion(node.children[i], path + "." + std::to_string(i));
      if (!c) return std::nullopt;
      child_conclusions.push_back(std::move(*c));
    }

    switch (node.kind) {
      case Certificate::Kind::empty_fill:
        if (!sys.valid_object(node.object)) {
          fail(path, "object is not valid in this system");
          return std::nullopt;
        }
        return empty_zigzag(node.object);

      case Certificate::Kind::inv_pair:
        if (!zigzag_wellformed(sys, node.u)) {
          fail(path, "stored zig-zag is not well-formed");
          return std::nullopt;
        }
        return compose(sys, node.u, invert(sys, node.u));

      case Certificate::Kind::rotate: {
        if (!zigzag_wellformed(sys, node.u) || !zigzag_wellformed(sys, node.v)) {
          fail(path, "stored zig-zag is not well-formed");
          return std::nullopt;
        }
        if (zigzag_target(sys, node.u) != node.v.start ||
            zigzag_target(sys, node.v) != node.u.start) {
          fail(path, "u and v do not compose to a closed zig-zag");
          return std::nullopt;
        }
        if (child_conclusions[0] != compose(sys, node.u, node.v)) {
          fail(path, "child does not conclude u.v");
          return std::nullopt;
        }
        return compose(sys, node.v, node.u);
      }

      case Certificate::Kind::paste: {
        for (const ZigZag* z : {&node.u, &node.v, &node.w})
          if (!zigzag_wellformed(sys, *z)) {
            fail(path, "stored zig-zag is not well-formed");
            return std::nullopt;
          }
        if (node.u.start != node.v.start || node.v.start != node.w.start ||
            zigzag_target(sys, node.u) != zigzag_target(sys, node.v) ||
            zigzag_target(sys, node.v) != zigzag_target(sys, node.w)) {
          fail(path, "u, v, w are not parallel");
          return std::nullopt;
        }
        if (child_conclusions[0] != compose(sys, node.u, invert(sys, node.v))) {
          fail(path, "first child does not conclude u.v⁻¹");
          return std::nullopt;
        }
        if (child_conclusions[1] != compose(sys, node.v, invert(sys, node.w))) {
          fail(path, "second child does not conclude v.w⁻¹");
          return std::nullopt;
        }
        return compose(sys, node.u, invert(sys, node.w));
      }

      case Certificate::Kind::invert: {
        if (!zigzag_wellformed(sys, node.u)) {
          fail(path, "stored zig-zag is not well-formed");
          return std::nullopt;
        }
        if (zigzag_target(sys, node.u) != node.u.start) {
          fail(path, "u is not closed");
          return std::nullopt;
        }
        if (child_conclusions[0] != node.u) {
          fail(path, "child does not conclude u");
          return std::nullopt;
        }
        return invert(sys, node.u);
      }

      case Certificate::Kind::diamond_fill: {
        if (!sys.valid_object(node.apex) || !sys.forward_applies(node.apex, node.left) ||
            !sys.forward_applies(node.apex, node.right)) {
          fail(path, "not a local peak of the system");
          return std::nullopt;
        }
        try {
          return certificate_conclusion(sys, lc, node);
        } catch (const EngineError& e) {
          fail(path, e.what());
          return std::nullopt;
        }
      }
    }
    fail(path, "unhandled node kind");
    return std::nullopt;
  }
};

}  // namespace

Report check_certificate(const RewritingSystem& sys, const LocalConfluenceStructure& lc,
                         const Certificate& cert, const ZigZag& u) {
  if (!zigzag_wellformed(sys, u)) return Report::fail("claimed zig-zag is not well-formed");
  if (zigzag_target(sys, u) != u.start) return Report::fail("claimed zig-zag is not closed");

  CertChecker checker{sys, lc};
  auto conclusion = checker.conclusion(cert, "root");
  if (!conclusion) return checker.failure;
  if (*conclusion != u)
    return Report::fail("root concludes a different zig-zag than claimed",
                        {"claimed length " + std::to_string(u.steps.size()) + ", derived length " +
                         std::to_string(conclusion->steps.size())});
  return Report::pass("certificate valid (" + std::to_string(certificate_size(cert)) + " nodes)");
}

}  // namespace polybasis
