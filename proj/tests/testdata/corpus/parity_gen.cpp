#include <ap_int.h>

// Even-parity bit over a byte.
void top_module(ap_uint<8> data, bool& parity) {
  bool p = false;
  for (int i = 0; i < 8; i++) {
#pragma HLS UNROLL
    p = p ^ ((data >> i) & 1);
  }
  parity = p;
}
