#include <ap_int.h>

// Fletcher-style checksum over a fixed block.
void top_module(const ap_uint<8> block[32], ap_uint<16>& checksum) {
  ap_uint<16> sum1 = 0;
  ap_uint<16> sum2 = 0;
  int i = 0;
  while (i < 32) {
    sum1 = (sum1 + block[i]) % 255;
    sum2 = (sum2 + sum1) % 255;
    i++;
  }
  checksum = (sum2 << 8) | sum1;
}
