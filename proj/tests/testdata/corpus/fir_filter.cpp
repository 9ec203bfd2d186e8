#include <ap_int.h>

// 8-tap FIR filter with a shift-register delay line.
void top_module(ap_int<16> sample, ap_int<32>& result) {
#pragma HLS PIPELINE II=1
  static const ap_int<16> coeff[8] = {3, -1, 4, 1, 5, -9, 2, 6};
  static ap_int<16> delay[8];
  for (int i = 7; i > 0; i--) {
#pragma HLS UNROLL
    delay[i] = delay[i - 1];
  }
  delay[0] = sample;
  ap_int<32> acc = 0;
  for (int t = 0; t < 8; t++) {
    acc += coeff[t] * delay[t];
  }
  result = acc;
}
