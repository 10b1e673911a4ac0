unsigned char block[64];
unsigned char unseqToSeq[256];
unsigned short mtfv[96];
int mtfFreq[258];
int nInUse;
int nblock;
int nMTF;

void generateMTFValues(void)
{
  unsigned char yy[256];
  int i, j, zPend, wr, EOB;
  unsigned char ll_i, tmp, tmp2;
  EOB = nInUse + 1;
  for (i = 0; i <= EOB; i++) mtfFreq[i] = 0;
  wr = 0;
  zPend = 0;
  for (i = 0; i < nInUse; i++) yy[i] = (unsigned char)i;
  for (i = 0; i < nblock; i++) {
    j = i - 1;
    if (j < 0) j = j + nblock;
    ll_i = unseqToSeq[block[j]];
    if (yy[0] == ll_i) {
      zPend++;
    } else {
      if (zPend > 0) {
        zPend--;
        while (1) {
          switch (zPend % 2) {
            case 0: mtfv[wr] = 0; wr++; mtfFreq[0]++; break;
            case 1: mtfv[wr] = 1; wr++; mtfFreq[1]++; break;
            default: ;
          }
          if (zPend < 2) break;
          zPend = (zPend - 2) / 2;
        }
        zPend = 0;
      }
      tmp = yy[1];
      yy[1] = yy[0];
      j = 1;
      while (ll_i != tmp) {
        j++;
        tmp2 = tmp;
        tmp = yy[j];
        yy[j] = tmp2;
      }
      yy[0] = tmp;
      if (j == 0) {
        mtfv[wr] = 0;
      } else {
        mtfv[wr] = j + 1;
      }
      wr++;
      mtfFreq[j + 1]++;
    }
  }
  mtfv[wr] = EOB;
  wr++;
  mtfFreq[EOB]++;
  nMTF = wr;
}

int main(void)
{
  int k;
  nInUse = 5;
  nblock = 64;
  for (k = 0; k < 256; k++) unseqToSeq[k] = k % 5;
  for (k = 0; k < nblock; k++) block[k] = (k * 7 + k / 3) % 5;
  generateMTFValues();
  return nMTF;
}
