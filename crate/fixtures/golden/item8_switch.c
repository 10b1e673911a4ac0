int zPend, wr;

int main(void)
{
  zPend = 3;
  switch (zPend % 2) {
    case 0: wr = 1;
    case 1: wr = 2;
    default: ;
  }
  return 0;
}
