int x, y;

int main(void)
{
  switch (x) {
    case 0:
      switch (y) {
        case 1: x = 2;
        default: ;
      }
    default: ;
  }
  return 0;
}
