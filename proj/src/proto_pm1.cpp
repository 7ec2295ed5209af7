#include "qpi/proto_pm1.hpp"

#include <stdexcept>

namespace qpi {

namespace {

std::vector<Gf2mElem> lift_f2(const Pm1Vec& w) {
  std::vector<Gf2mElem> out(w.size());
  for (size_t i = 0; i < w.size(); ++i) out[i] = Gf2mElem{1, w[i].bit()};
  return out;
}

}  // namespace

Pm1Protocol::Pm1Protocol(Pm1Variant v, Partition p)
    : variant(v), part(std::move(p)), M(parity_check(part, 1)) {}

int Pm1Protocol::d_bits() const {
  return variant == Pm1Variant::random_key_basic ? n() : n() - t();
}

int Pm1Protocol::randomness_bits() const {
  return variant == Pm1Variant::random_key_basic ? t() : 0;
}

std::vector<Pm1> Pm1Protocol::publish(const Pm1Vec& w, const std::vector<Pm1>& keys) const {
  if (static_cast<int>(w.size()) != n()) throw std::invalid_argument("w length mismatch");
  std::vector<Pm1> out;
  switch (variant) {
    case Pm1Variant::coset: {
      std::vector<Gf2mElem> q = apply_matrix(M, lift_f2(w));
      for (const Gf2mElem& e : q) out.push_back(Pm1::from_bit(e.bits & 1u));
      break;
    }
    case Pm1Variant::random_key_basic: {
      if (static_cast<int>(keys.size()) != t())
        throw std::invalid_argument("basic variant needs t keys");
      out.assign(w.size(), Pm1(+1));
      for (int i = 0; i < t(); ++i)
        for (int j : part.blocks[i]) out[j] = f2_add(keys[i], w[j]);
      break;
    }
    case Pm1Variant::random_key_improved: {
      for (const auto& block : part.blocks) {
        Pm1 head = w[block[0]];
        for (size_t k = 1; k < block.size(); ++k) out.push_back(f2_add(head, w[block[k]]));
      }
      break;
    }
  }
  if (static_cast<int>(out.size()) != d_bits()) throw std::logic_error("publication size");
  return out;
}

Pm1Vec Pm1Protocol::representative(const std::vector<Pm1>& publication) const {
  if (static_cast<int>(publication.size()) != d_bits())
    throw std::invalid_argument("publication length mismatch");
  switch (variant) {
    case Pm1Variant::coset: {
      std::vector<Gf2mElem> q(publication.size());
      for (size_t i = 0; i < publication.size(); ++i)
        q[i] = Gf2mElem{1, publication[i].bit()};
      std::vector<Gf2mElem> u = solve_affine(M, q);
      Pm1Vec out(u.size());
      for (size_t i = 0; i < u.size(); ++i) out[i] = Pm1::from_bit(u[i].bits & 1u);
      return out;
    }
    case Pm1Variant::random_key_basic: {
      return publication;  // the masked vector itself
    }
    case Pm1Variant::random_key_improved: {
      Pm1Vec out(n(), Pm1(+1));
      size_t pos = 0;
      for (const auto& block : part.blocks) {
        out[block[0]] = Pm1(+1);  // head normalized away by the mask
        for (size_t k = 1; k < block.size(); ++k) out[block[k]] = publication[pos++];
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<double> Pm1Protocol::answer(const std::vector<Pm1>& publication,
                                        const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n()) throw std::invalid_argument("x length mismatch");
  Pm1Vec u = representative(publication);
  std::vector<double> out;
  out.reserve(part.blocks.size());
  for (const auto& block : part.blocks) {
    double s = 0;
    for (int j : block) s += u[j].value() * x[j];
    out.push_back(s);
  }
  return out;
}

std::vector<Pm1> Pm1Protocol::keys(const Pm1Vec& w, const std::vector<Pm1>& publication) const {
  Pm1Vec u = representative(publication);
  std::vector<Pm1> out;
  out.reserve(part.blocks.size());
  for (const auto& block : part.blocks) {
    Pm1 l = f2_add(w[block[0]], u[block[0]]);
    for (int j : block)  // shift invariant: u agrees with w up to one sign per block
      if (f2_add(w[j], u[j]).v != l.v) throw std::logic_error("block shift invariant violated");
    out.push_back(l);
  }
  return out;
}

double Pm1Protocol::decode(const Pm1Vec& w, const std::vector<Pm1>& publication,
                           const std::vector<double>& answers) const {
  if (answers.size() != part.blocks.size()) throw std::invalid_argument("answer count mismatch");
  std::vector<Pm1> l = keys(w, publication);
  double s = 0;
  for (size_t i = 0; i < answers.size(); ++i) s += l[i].value() * answers[i];
  return s;
}

}  // namespace qpi
