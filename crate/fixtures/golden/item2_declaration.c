unsigned char yy[256];

int main(void)
{
  return 0;
}
