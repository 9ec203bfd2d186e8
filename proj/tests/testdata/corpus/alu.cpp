#include <ap_int.h>

// Four-operation ALU selected by a 2-bit opcode.
void top_module(ap_int<16> lhs, ap_int<16> rhs, ap_uint<2> opcode,
                ap_int<17>& out) {
  ap_int<17> result = 0;
  switch (opcode) {
    case 0:
      result = lhs + rhs;
      break;
    case 1:
      result = lhs - rhs;
      break;
    case 2:
      result = lhs & rhs;
      break;
    default:
      result = lhs | rhs;
      break;
  }
  out = result;
}
