#include "eginv/parts.hpp"

namespace eginv {

SymbolRole role_of(PartTag part) {
  switch (part) {
    case PartTag::APlus0:
    case PartTag::Ad:
    case PartTag::AMinus0:
    case PartTag::APlus:
    case PartTag::AMinus:
      return SymbolRole::A;
    case PartTag::BPlus:
    case PartTag::BMinus:
      return SymbolRole::B;
    case PartTag::CPlus:
    case PartTag::CMinus:
      return SymbolRole::C;
    default:
      return SymbolRole::D;
  }
}

std::string part_name(PartTag part) {
  switch (part) {
    case PartTag::APlus0: return "A+0";
    case PartTag::Ad: return "Ad";
    case PartTag::AMinus0: return "A-0";
    case PartTag::APlus: return "A+";
    case PartTag::AMinus: return "A-";
    case PartTag::BPlus: return "B+";
    case PartTag::BMinus: return "B-";
    case PartTag::CPlus: return "C+";
    case PartTag::CMinus: return "C-";
    case PartTag::DPlus0: return "D+0";
    case PartTag::Dd: return "Dd";
    case PartTag::DMinus0: return "D-0";
    case PartTag::DPlus: return "D+";
    case PartTag::DMinus: return "D-";
  }
  return "?";
}

std::string role_name(SymbolRole role) {
  switch (role) {
    case SymbolRole::A: return "A";
    case SymbolRole::B: return "B";
    case SymbolRole::C: return "C";
    case SymbolRole::D: return "D";
  }
  return "?";
}

std::pair<int, int> role_shape(const AlgebraInstance& inst, SymbolRole role) {
  switch (role) {
    case SymbolRole::A: return {inst.p, inst.p};
    case SymbolRole::B: return {inst.p, inst.q};
    case SymbolRole::C: return {inst.q, inst.p};
    case SymbolRole::D: return {inst.q, inst.q};
  }
  return {0, 0};
}

bool mat_keeps(PartTag part, int i, int j) {
  switch (part) {
    case PartTag::APlus:
    case PartTag::BPlus:
    case PartTag::DPlus:
      return i <= j;
    case PartTag::AMinus:
    case PartTag::CMinus:
    case PartTag::DMinus:
      return i >= j;
    case PartTag::APlus0:
    case PartTag::CPlus:
    case PartTag::DPlus0:
      return i < j;
    case PartTag::AMinus0:
    case PartTag::BMinus:
    case PartTag::DMinus0:
      return i > j;
    case PartTag::Ad:
    case PartTag::Dd:
      return i == j;
  }
  return false;
}

bool seq_keeps(PartTag part, int j) {
  switch (part) {
    case PartTag::APlus:
    case PartTag::BPlus:
    case PartTag::DPlus:
      return j >= 0;
    case PartTag::AMinus:
    case PartTag::CMinus:
    case PartTag::DMinus:
      return j <= 0;
    case PartTag::APlus0:
    case PartTag::CPlus:
    case PartTag::DPlus0:
      return j >= 1;
    case PartTag::AMinus0:
    case PartTag::BMinus:
    case PartTag::DMinus0:
      return j <= -1;
    case PartTag::Ad:
    case PartTag::Dd:
      return j == 0;
  }
  return false;
}

PartTag complement_of(PartTag part) {
  switch (part) {
    case PartTag::APlus: return PartTag::AMinus0;
    case PartTag::AMinus0: return PartTag::APlus;
    case PartTag::AMinus: return PartTag::APlus0;
    case PartTag::APlus0: return PartTag::AMinus;
    case PartTag::BPlus: return PartTag::BMinus;
    case PartTag::BMinus: return PartTag::BPlus;
    case PartTag::CPlus: return PartTag::CMinus;
    case PartTag::CMinus: return PartTag::CPlus;
    case PartTag::DPlus: return PartTag::DMinus0;
    case PartTag::DMinus0: return PartTag::DPlus;
    case PartTag::DMinus: return PartTag::DPlus0;
    case PartTag::DPlus0: return PartTag::DMinus;
    default:
      fail(ErrorKind::PartMismatch, "no single-part complement for " + part_name(part));
  }
}

}  // namespace eginv
