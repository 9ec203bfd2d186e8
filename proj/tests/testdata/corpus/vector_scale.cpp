#include <ap_int.h>

// Scale a vector by a constant factor.
void top_module(const ap_int<12> in[8], ap_int<16> out[8], ap_int<4> factor) {
  for (int i = 0; i < 8; i++) {
#pragma HLS PIPELINE II=1
    out[i] = in[i] * factor;
  }
}
